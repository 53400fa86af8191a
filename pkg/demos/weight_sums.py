"""Weight sums sum |h|^r of Berge-free hosts, scaled by n^r.

Run: python demos/weight_sums.py
"""

from bergekit.boundslab import ratio_ceiling, rows_to_csv, scaling_experiment
from bergekit.hgio import load_pattern

K3 = load_pattern("k3.hg")
rows = scaling_experiment(K3, 2, ["single-edge", "greedy-random"], range(4, 13), seed=1,
                          pattern_name="k3")
print(rows_to_csv(rows), end="")
print("ratio ceiling for K3 hosts with edges of size >= 3:", ratio_ceiling(K3))
