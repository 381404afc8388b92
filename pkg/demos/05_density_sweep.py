"""A small sweep: how close do greedy orderings get to the upper bound?

The CSV is deterministic, so it can be diffed between runs or machines.
"""

import csv
import io
from collections import defaultdict

from grdisc.sweep import run_sweep, sweep_csv

text = sweep_csv(run_sweep(2, [40, 80], ["0.1", "0.25", "0.5", "0.75", "0.9"], seeds=3))
print(text.splitlines()[0])
print(text.splitlines()[1], "...")

worst = defaultdict(float)
for row in csv.DictReader(io.StringIO(text)):
    worst[row["p"], row["variant"]] = max(worst[row["p"], row["variant"]], float(row["ratio"]))
print("\nworst max|N|/bound per density")
for (p, variant), ratio in sorted(worst.items()):
    print(f"  p={p:<6} {variant:5s} {ratio:.3f}")
