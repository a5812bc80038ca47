"""
Reading the full experiment
===========================

``ctxlab run --out runs/acceptance`` produces the complete grid of attacks.
This script prints the results table and the headline numbers from it.
"""
import json
import sys
from pathlib import Path

run = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/acceptance")
report = run / "report"
print((report / "table.md").read_text())

m = json.loads((report / "metrics.json").read_text())
for name, auc in sorted(m["roc_auc"].items()):
    print(f"ROC-AUC benign vs {name:<28} {auc:.3f}")
h = m["histograms"].get("pooled")
if h:
    print(f"KS to benign: baseline {h['ks_benign_baseline']:.3f}, adaptive {h['ks_benign_adc']:.3f}")
t = m["extra"].get("object_count_trend")
if t:
    print("success by object count", dict(zip(t["counts"], [round(s, 3) for s in t["success"]])),
          f"Spearman {t['spearman']:.3f}")
print("figures:", ", ".join(sorted(p.name for p in report.glob("*.png"))))
