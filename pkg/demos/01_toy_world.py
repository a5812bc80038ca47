"""
The toy world
=============

Scenes are drawn from two groups of co-occurring categories (street and
indoor).  Each object is a low-contrast glyph on a textured background, so the
detector has to look at the whole scene to be sure of what it sees.
"""
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from matplotlib.patches import Rectangle

from ctxlab.scenegen import cooccurrence_counts, default_model, generate_dataset

model = default_model(max_objects=5)
data = generate_dataset(model, 200, seed=0)
print("categories:", ", ".join(model.categories.labels))
print("splits:", {name: len(getattr(data, name)) for name in ("train", "val", "test")})

# Co-occurrence counts: the two groups never mix.
counts = cooccurrence_counts(data.train, model.categories)
print(counts.astype(int))

# A few scenes with their boxes.
fig, axes = plt.subplots(2, 4, figsize=(10, 5.2))
for ax, scene in zip(axes.flat, data.train[:8]):
    ax.imshow(scene.image)
    for obj in scene.objects:
        x, y, w, h = obj.bbox
        ax.add_patch(Rectangle((x, y), w, h, fill=False, color="yellow", lw=1))
        ax.text(x, y - 2, obj.category, color="yellow", fontsize=6)
    ax.set_axis_off()
fig.tight_layout()
out = sys.argv[1] if len(sys.argv) > 1 else "toy_world.png"
fig.savefig(out, dpi=110)
print("wrote", out)

# Object counts per scene.
print("objects per scene:", np.bincount([s.n_objects for s in data.train]))
