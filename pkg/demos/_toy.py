"""Small shared setup for the demos: a 700-scene world trained once and cached under runs/demo."""
from pathlib import Path

from ctxlab.experiment import ExperimentConfig
from ctxlab.pipeline import load_datasets, load_system, stage_data, stage_train

OUT = Path(__file__).resolve().parents[1] / "runs" / "demo"

CONFIG = ExperimentConfig.from_dict({
    "dataset": {"n_scenes": 700, "attacker_seed": 500_000},
    "detector": {"epochs": 4, "min_val_accuracy": 0.9},
    "defense": {"epochs": 100},
    "out": str(OUT),
})


def toy_world(with_surrogate=False):
    """(defender data, target system, surrogate system or None); trains on first use."""
    stage_data(CONFIG)
    stage_train(CONFIG, with_surrogate=True)
    defender, _ = load_datasets(CONFIG)
    surrogate = load_system(CONFIG, "surrogate") if with_surrogate else None
    return defender, load_system(CONFIG, "target"), surrogate
