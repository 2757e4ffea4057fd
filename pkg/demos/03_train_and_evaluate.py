"""Embed patches with the frozen backbone, cross-validate the head, report.

Run 01 and 02 first. The backbone is a frozen ResNet-18 exported to ONNX and
executed by the bundled numpy graph runner; its 512-d embeddings are computed
once into a cache, after which training epochs are pure numpy and fast.

The first run exports the backbone (needs torch); later runs reuse the file.
"""

from pathlib import Path

import numpy as np

from palmscan.backbone import build_cache, load_backbone
from palmscan.dataset import load_patchset, train_test_split
from palmscan.metrics import evaluate_features
from palmscan.mlp_head import save_head
from palmscan.training import TrainConfig, TrainData, cross_validate, fit_final

HERE = Path(__file__).parent
PATCHES = HERE / "out" / "patches"
MODEL = HERE / "out" / "backbone.onnx"
OUT = HERE / "out" / "run"

if not MODEL.exists():
    from palmscan.export_backbone import export_resnet18
    print("exporting frozen backbone (one-time)...")
    export_resnet18(MODEL, seed=0)

bbone = load_backbone(MODEL)
patchset = load_patchset(PATCHES)
train_set, test_set = train_test_split(patchset, 0.8, seed=0)
print(f"{len(train_set)} train / {len(test_set)} test patches")

cache = build_cache(bbone, [(it.id, it.patch) for it in patchset.items])
print(f"embedded {len(cache)} patches (D={cache.dim})")


def as_train_data(part):
    features = cache.matrix([it.id for it in part.items])
    labels = np.array([1 if it.label == "palm" else 0 for it in part.items])
    return features, labels


features, labels = as_train_data(train_set)
config = TrainConfig(epochs=50, nnodes=256, seed=0)
history = cross_validate(TrainData(features, labels), 5, config)
print(f"5-fold CV selected epoch {history.selected_epoch} "
      f"(fold {history.selected_fold})")

head = fit_final(TrainData(features, labels), config, history)
OUT.mkdir(parents=True, exist_ok=True)
save_head(head, OUT / "head.bin")

test_features, test_labels = as_train_data(test_set)
report = evaluate_features(head, test_features, test_labels,
                           scale="fine40", nnodes=256)
print()
print(report.to_table())
print(f"head -> {OUT / 'head.bin'}")
