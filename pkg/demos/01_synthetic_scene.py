"""Generate a synthetic orthomosaic with known palm positions.

Real survey rasters are large and private, so everything downstream can be
exercised against this generator instead: palm-like frond stars, distractor
crowns with matching color statistics, low-frequency canopy noise, and an
optional cleaned-off border recorded as nodata.
"""

from pathlib import Path

from palmscan.synthgen import SynthConfig, generate, save

OUT = Path(__file__).parent / "out" / "scene"

config = SynthConfig(width=800, height=800, n_palms=25, n_distractors=25,
                     masked_border=12, seed=7)
ortho, palms, distractors = generate(config)
raster_path, truth_path = save(ortho, palms, distractors, OUT)

print(f"scene: {ortho.width}x{ortho.height}, "
      f"{len(palms)} palms, {len(distractors)} distractors")
print(f"nodata fraction: {ortho.nodata_mask.mean():.3f} (masked border)")
print(f"raster  -> {raster_path}")
print(f"truth   -> {truth_path}")
print()
print("The truth.csv uses the same id,x,y,label layout as a field survey,")
print("so the extraction demo can consume it unchanged.")
