"""Finding Berge copies, and how shadows relate to them.

Run: python demos/berge_copies.py
"""

from bergekit import (blue_edges, find_berge, make_hypergraph, shadow, turan_hypergraph)
from bergekit.boundslab import copies_in_shadow
from bergekit.hgio import load_pattern

K3 = load_pattern("k3.hg")
K4 = load_pattern("k4.hg")

# Three triples that pairwise share one vertex of {0, 1, 2}: each pair of the
# triangle sits in its own triple, so this is a Berge triangle.
H = make_hypergraph(6, [[0, 1, 3], [1, 2, 4], [0, 2, 5]])
emb = find_berge(H, K3)
print("Berge triangle:", emb.vertex_map, "->", [H.edges[j] for j in emb.edge_map])

# One big edge has a triangle in its shadow but only one edge to spend on it.
big = make_hypergraph(5, [range(5)])
print("single 5-edge: shadow triangles =", copies_in_shadow(big, K3),
      "| Berge copy:", find_berge(big, K3))
print("blue pairs of the 5-edge:", len(blue_edges(big, K3)), "of", shadow(big, 2).m)

# Rainbow triples over three parts never hold a Berge K4.
for n in range(4, 10):
    T = turan_hypergraph(n, 3, 3)
    print(f"T^3({n},3): {T.m:3d} triples, Berge-K4 copy: {find_berge(T, K4) is not None}")
