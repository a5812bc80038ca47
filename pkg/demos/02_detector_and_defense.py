"""
Detector, context profiles and the consistency check
====================================================

Trains (or loads) a small detector and its auto-encoder bank, then looks at
how the bank scores clean test scenes against the calibrated threshold.
"""
import numpy as np

from _toy import toy_world
from ctxlab.defense import benign_scores
from ctxlab.detector import detect, evaluate_accuracy, propose_regions

data, system, _ = toy_world()
cats = data.model.categories
print(f"val accuracy {system.val_accuracy:.4f}")
print(f"test accuracy {evaluate_accuracy(system.detector, data.test, cats):.4f}")

# One scene: per-region predictions and their context profiles.
scene = data.test[0]
res = detect(scene.image, system.detector, propose_regions(scene.image, scene.objects))
for obj, c, p in zip(scene.objects, res.categories, res.probs):
    print(f"  {obj.category:>8} -> {cats.all_labels[c]:>10}  p={p.max():.3f}")
print("profile shape", res.profiles.shape)

# Benign image scores against the threshold calibrated at FPR 0.1 on val.
scores = benign_scores(data.test, system.detector, system.bank)
print(f"threshold {system.bank.threshold:.5f}")
print(f"test flag rate {np.mean(scores > system.bank.threshold):.3f}")
print("score quartiles", np.round(np.quantile(scores, [0.25, 0.5, 0.75]), 5))
