"""Cut labeled 40x40 patches around survey points and preview augmentation.

Run 01_synthetic_scene.py first. Each survey point becomes one fine-scale
patch centered on it; points whose window would overhang the raster are
skipped and reported rather than padded.
"""

from pathlib import Path

from palmscan.dataset import (AugmentationConfig, augment, extract_fine,
                              item_rng, load_survey_csv, save_patchset)
from palmscan.raster import load_orthomosaic

SCENE = Path(__file__).parent / "out" / "scene"
OUT = Path(__file__).parent / "out" / "patches"

ortho = load_orthomosaic(SCENE / "raster.png")
rows = load_survey_csv(SCENE / "truth.csv")
palms = [(x, y) for _, x, y, label in rows if label == "palm"]
nonpalms = [(x, y) for _, x, y, label in rows if label == "nonpalm"]

patchset, skipped = extract_fine(ortho, palms, nonpalms)
print(f"extracted {len(patchset)} patches "
      f"({len(patchset.by_label('palm'))} palm, "
      f"{len(patchset.by_label('nonpalm'))} nonpalm), skipped {len(skipped)}")

# augmentation is sampled per (epoch, item) so reruns are reproducible
config = AugmentationConfig()
example = patchset.items[0]
for epoch in range(3):
    rng = item_rng(config.seed, epoch, example.id)
    variant = augment(example.patch, config, rng)
    delta = abs(variant.pixels.astype(int) - example.patch.pixels).mean()
    print(f"epoch {epoch}: augmented {example.id}, mean |delta| = {delta:.1f}")

save_patchset(patchset, OUT)
print(f"patch set -> {OUT} (manifest.json + one PNG per patch)")
