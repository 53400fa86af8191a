"""The matching partition, and a small graph where the strict version does not exist.

Run: python demos/matching_partition.py
"""

from bergekit import BipartiteGraph, PartitionError, matching_partition
from bergekit.oracles import partition_exists

G = BipartiteGraph(2, 3, ((0, 1), (1, 2)))
print("path-like graph:", matching_partition(G).to_json())

# A-vertices 0, 1, 2 with neighbors {1,3}, {0,2}, {0,1}.  Every maximum
# matching leaves some A1 vertex with all of its neighbors matched.
bad = BipartiteGraph(3, 4, ((1, 3), (0, 2), (0, 1)))
try:
    matching_partition(bad)
except PartitionError as exc:
    print("strict partition:", exc)
print("brute-force search finds a certificate:", partition_exists(3, 4, bad.edges))

weak = matching_partition(bad, require_private=False)
print("weaker partition:", weak.to_json(), "violations:", weak.violations(bad))
