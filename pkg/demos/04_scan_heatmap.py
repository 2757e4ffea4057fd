"""Slide the trained detector across a raster and render probability maps.

Run 01 and 03 first. Every 40x40 window on a 10 px stride is scored and its
probability averaged over the window footprint, giving a smooth per-pixel
map; windows with >= 25% missing pixels vote zero without touching the
backbone. Candidate 100x100 review windows come from non-maximum suppression
over local maxima.

Scanning the full 800x800 scene takes a few minutes with the numpy executor,
so this demo scans a 300x300 crop; pass --full to scan everything.
"""

import sys
from pathlib import Path

from PIL import Image

from palmscan.backbone import load_backbone
from palmscan.mlp_head import load_head
from palmscan.raster import load_orthomosaic
from palmscan.scan import (ScanConfig, find_candidates, overlay,
                           render_heatmap, save_grid, scan_model)

HERE = Path(__file__).parent
SCENE = HERE / "out" / "scene"
OUT = HERE / "out" / "scan"

ortho = load_orthomosaic(SCENE / "raster.png")
if "--full" not in sys.argv:
    crop = Image.open(SCENE / "raster.png").crop((100, 100, 400, 400))
    crop_path = OUT / "crop.png"
    OUT.mkdir(parents=True, exist_ok=True)
    crop.save(crop_path)
    ortho = load_orthomosaic(crop_path)
    print("scanning a 300x300 crop (use --full for the whole scene)")

bbone = load_backbone(HERE / "out" / "backbone.onnx")
head = load_head(HERE / "out" / "run" / "head.bin")

grid = scan_model(ortho, bbone, head, ScanConfig(patch_size=40, stride=10),
                  workers=2)
OUT.mkdir(parents=True, exist_ok=True)
save_grid(grid, OUT / "grid.bin")
Image.fromarray(render_heatmap(grid)).save(OUT / "heatmap.png")
Image.fromarray(overlay(ortho, grid)).save(OUT / "overlay.png")

candidates = find_candidates(grid, threshold=0.5, min_distance=50)
print(f"grid covers {100 * (grid.count > 0).mean():.0f}% of pixels")
print(f"{len(candidates)} candidate windows above 0.5:")
for cand in candidates[:10]:
    print(f"  ({cand.window.x0:4d},{cand.window.y0:4d}) "
          f"score {cand.score:.3f}")
print(f"outputs -> {OUT}")

import json
(OUT / "candidates.json").write_text(json.dumps(
    [{"x0": c.window.x0, "y0": c.window.y0, "size": c.window.size,
      "score": c.score} for c in candidates], indent=1))
