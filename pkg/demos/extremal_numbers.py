"""Exact extremal numbers on small vertex counts.

Run: python demos/extremal_numbers.py
"""

from bergekit import ex_berge, ex_uniform, ramsey_number, verify_sandwich
from bergekit.boundslab import decaen_bound
from bergekit.hgio import load_pattern

K3 = load_pattern("k3.hg")

print("n   ex_2(n,K3)  ex_3(n,Berge-K3)")
for n in range(3, 8):
    print(f"{n}   {ex_uniform(n, 2, K3).value:>9}  {ex_berge(n, 3, K3).value:>16}")

res = ex_berge(6, 3, K3, collect_all=True)
print(f"\nex_3(6, Berge-K3) = {res.value}, {len(res.witnesses)} extremal classes:")
for W in res.witnesses:
    print("  ", W.edges)

rep = verify_sandwich(5, 2, 3, K3)
print(f"\nsandwich at n=5: {rep['lower']} <= {rep['middle']} <= {rep['upper']}  ({rep['status']})")

K4 = load_pattern("k4.hg")
print("\nde Caen bound vs exact Turan numbers for K4 (graphs):")
for n in range(4, 9):
    print(f"  n={n}: exact {ex_uniform(n, 2, K4).value:2d}, bound {decaen_bound(n, 2, 4)}")

print("\nR(K3, K3) =", ramsey_number(K3, cap=6).value)
