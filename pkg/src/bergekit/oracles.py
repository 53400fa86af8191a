"""Deliberately naive reference implementations.

Nothing here shares search code with the rest of the package: every answer is
obtained by enumerating permutations or subsets directly.  Only usable on
very small inputs; the test and acceptance suites compare the fast
implementations against these.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .hypercore import Hypergraph


def _edge_sets(H: Hypergraph) -> list[frozenset[int]]:
    return [frozenset(e) for e in H.edges]


def berge(H: Hypergraph, F: Hypergraph) -> bool:
    """Some injective vertex map plus injective edge assignment with containment."""
    hs = _edge_sets(H)
    fs = _edge_sets(F)
    if len(fs) > len(hs) or F.n > H.n:
        return False
    for phi in permutations(range(H.n), F.n):
        images = [frozenset(phi[v] for v in f) for f in fs]
        inside = [[img <= h for h in hs] for img in images]
        if not all(any(row) for row in inside):
            continue
        for assign in permutations(range(len(hs)), len(fs)):
            if all(inside[j][i] for j, i in enumerate(assign)):
                return True
    return False


def injections(P: Hypergraph, H: Hypergraph) -> int:
    hs = set(_edge_sets(H))
    return sum(1 for phi in permutations(range(H.n), P.n)
               if all(frozenset(phi[v] for v in e) in hs for e in P.edges))


def sub_copies(P: Hypergraph, H: Hypergraph) -> int:
    return injections(P, H) // injections(P, P)


def contains(H: Hypergraph, F: Hypergraph) -> bool:
    return injections(F, H) > 0


def canonical(H: Hypergraph) -> tuple:
    """Least sorted mask sequence over all n! relabelings."""
    best = None
    for perm in permutations(range(H.n)):
        key = tuple(sorted(sum(1 << perm[v] for v in e) for e in H.edges))
        if best is None or key < best:
            best = key
    return (H.n, best)


def cliques(H: Hypergraph, s: int, k: int) -> int:
    hs = set(_edge_sets(H))
    return sum(1 for c in combinations(range(H.n), s)
               if all(frozenset(x) in hs for x in combinations(c, k)))


def max_free(n: int, r: int, free) -> tuple[int, list[Hypergraph]]:
    """Largest edge count over all r-graphs on n vertices passing ``free``."""
    triples = list(combinations(range(n), r))
    for size in range(len(triples), -1, -1):
        hits = [Hypergraph(n, es) for es in combinations(triples, size)
                if free(Hypergraph(n, es))]
        if hits:
            return size, hits
    return 0, []


def maximum_matching_size(size_a: int, size_b: int, edges) -> int:
    edges = list(edges)
    for k in range(min(size_a, size_b), -1, -1):
        for sub in combinations(edges, k):
            if len({a for a, _ in sub}) == k and len({b for _, b in sub}) == k:
                return k
    return 0


def partition_exists(size_a: int, size_b: int, edges) -> bool:
    """Search every maximum matching and every split of A for a valid certificate."""
    edges = list(edges)
    adj = [set() for _ in range(size_a)]
    for a, b in edges:
        adj[a].add(b)
    best = maximum_matching_size(size_a, size_b, edges)
    for sub in combinations(edges, best):
        if len({a for a, _ in sub}) < best or len({b for _, b in sub}) < best:
            continue
        mate = dict(sub)
        bprime = set(mate.values())
        for k in range(size_a + 1):
            for A1 in combinations(range(size_a), k):
                if any(a not in mate for a in A1):
                    continue
                B2 = bprime - {mate[a] for a in A1}
                A2 = set(range(size_a)) - set(A1)
                if (all(adj[a] <= B2 for a in A2)
                        and all(adj[a] - bprime for a in A1)):
                    return True
    return False


def ramsey_good_coloring_exists(F: Hypergraph, r: int, N: int) -> bool:
    """Some 2-coloring of K_N^(r) with neither class containing F."""
    es = list(combinations(range(N), r))
    for bits in range(2 ** len(es)):
        red = Hypergraph(N, tuple(e for i, e in enumerate(es) if bits >> i & 1))
        blue = Hypergraph(N, tuple(e for i, e in enumerate(es) if not bits >> i & 1))
        if not contains(red, F) and not contains(blue, F):
            return True
    return False
