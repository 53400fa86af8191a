"""Bipartite matchings, the matching partition certificate and the red-blue reduction.

Partition construction.  With a maximum matching ``M`` and ``U`` the
unmatched B-vertices, let ``Z`` be everything reachable from ``U`` by
alternating paths (B to A along non-matching edges, A to B along matching
edges).  Taking ``A1 = A & Z``, ``B1 = M(A1)``, ``A2 = A - A1`` and
``B2 = B' - B1`` always gives a matched ``A1``/``B1`` pair with every
neighbor of ``A2`` inside ``B2``.  ``A & Z`` does not depend on ``M``.

The extra requirement that each ``A1`` vertex sees an unmatched B-vertex
depends on which maximum matching is used, and some graphs admit none (the
smallest has three A-vertices and four B-vertices).  The code first rotates
matchings along alternating paths, then searches exactly for the set of
B-vertices to leave unmatched; when that search proves no choice works, :class:`PartitionError` is raised with a dump of the instance.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .matching import match_all
from .hypercore import (HypergraphError, RedBlueHypergraph,
                        UniformHypergraph, count_cliques, iter_cliques, shadow, to_mask)


class PartitionError(RuntimeError):
    """No valid partition was produced; ``dump`` holds the diagnostic data."""

    def __init__(self, message: str, dump: dict):
        super().__init__(message)
        self.dump = dump


@dataclass(frozen=True)
class BipartiteGraph:
    size_a: int
    size_b: int
    adjacency: tuple[tuple[int, ...], ...]
    a_labels: tuple | None = field(default=None, compare=False)
    b_labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.size_a:
            raise ValueError(f"{len(self.adjacency)} adjacency rows for {self.size_a} A-vertices")
        adj = []
        for a, row in enumerate(self.adjacency):
            row = tuple(sorted(set(row)))
            if row and (row[0] < 0 or row[-1] >= self.size_b):
                raise ValueError(f"neighbor of a{a} out of range")
            adj.append(row)
        object.__setattr__(self, "adjacency", tuple(adj))

    @classmethod
    def from_edges(cls, size_a: int, size_b: int,
                   edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        rows = [[] for _ in range(size_a)]
        for a, b in edges:
            rows[a].append(b)
        return cls(size_a, size_b, tuple(tuple(r) for r in rows))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, row in enumerate(self.adjacency) for b in row]

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    @property
    def mate_a(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def mate_b(self) -> dict[int, int]:
        return {b: a for a, b in self.pairs}

    def __len__(self) -> int:
        return len(self.pairs)

    def is_valid(self, G: BipartiteGraph) -> bool:
        As = [a for a, _ in self.pairs]
        Bs = [b for _, b in self.pairs]
        return (len(set(As)) == len(As) and len(set(Bs)) == len(Bs)
                and all(G.has_edge(a, b) for a, b in self.pairs))


def _augment(G: BipartiteGraph, mate_a: dict, mate_b: dict, a: int, seen: set) -> bool:
    # iterative DFS along alternating paths; recursion depth would reach |A|
    stack = [(a, iter(G.adjacency[a]))]
    path = []
    while stack:
        u, it = stack[-1]
        advanced = False
        for b in it:
            if b in seen:
                continue
            seen.add(b)
            if b not in mate_b:
                path.append((u, b))
                for x, y in path:
                    mate_a[x] = y
                    mate_b[y] = x
                return True
            path.append((u, b))
            stack.append((mate_b[b], iter(G.adjacency[mate_b[b]])))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if path:
                path.pop()
    return False


def find_augmenting_path(G: BipartiteGraph, M: Matching) -> list[int] | None:
    """An M-augmenting path as alternating A/B vertex ids, or None."""
    mate_a, mate_b = M.mate_a, M.mate_b
    parent: dict[tuple[str, int], tuple[str, int] | None] = {}
    queue = deque()
    for a in range(G.size_a):
        if a not in mate_a:
            parent[("a", a)] = None
            queue.append(a)
    while queue:
        a = queue.popleft()
        for b in G.adjacency[a]:
            if ("b", b) in parent or mate_a.get(a) == b:
                continue
            parent[("b", b)] = ("a", a)
            if b not in mate_b:
                path, node = [], ("b", b)
                while node is not None:
                    path.append(node[1])
                    node = parent[node]
                return path[::-1]
            a2 = mate_b[b]
            if ("a", a2) not in parent:
                parent[("a", a2)] = ("b", b)
                queue.append(a2)
    return None


def maximum_matching(G: BipartiteGraph) -> Matching:
    """Maximum cardinality matching by repeated augmenting-path search."""
    mate_a: dict[int, int] = {}
    mate_b: dict[int, int] = {}
    for a in range(G.size_a):
        _augment(G, mate_a, mate_b, a, set())
    M = Matching(tuple(mate_a.items()))
    assert M.is_valid(G)
    assert find_augmenting_path(G, M) is None, "matching is not maximum"
    return M


@dataclass(frozen=True)
class MatchingPartition:
    M: Matching
    A1: frozenset[int]
    A2: frozenset[int]
    B1: frozenset[int]
    B2: frozenset[int]
    Bprime: frozenset[int]

    def violations(self, G: BipartiteGraph) -> list[str]:
        """Names of the partition conditions that fail (empty when valid)."""
        out = []
        mate_a = self.M.mate_a
        if not self.M.is_valid(G) or find_augmenting_path(G, self.M) is not None:
            out.append("maximum")
        if (self.Bprime != frozenset(mate_a.values()) or self.B1 | self.B2 != self.Bprime
                or self.B1 & self.B2 or self.A1 | self.A2 != frozenset(range(G.size_a))
                or self.A1 & self.A2):
            out.append("partition")
        if not (all(a in mate_a for a in self.A1)
                and frozenset(mate_a[a] for a in self.A1 if a in mate_a) == self.B1):
            out.append("a1_matched_onto_b1")
        if any(b not in self.B2 for a in self.A2 for b in G.adjacency[a]):
            out.append("a2_neighbors_in_b2")
        if any(all(b in self.Bprime for b in G.adjacency[a]) for a in self.A1):
            out.append("a1_private_neighbor")
        return out

    def to_json(self) -> dict:
        return {
            "M": [list(p) for p in self.M.pairs],
            "A1": sorted(self.A1), "A2": sorted(self.A2),
            "B1": sorted(self.B1), "B2": sorted(self.B2),
            "Bprime": sorted(self.Bprime),
        }


def alternating_reach(G: BipartiteGraph, M: Matching) -> tuple[set[int], set[int]]:
    """(A-part, B-part) of the set reachable by alternating paths from unmatched B."""
    mate_a, mate_b = M.mate_a, M.mate_b
    nbr_b: list[list[int]] = [[] for _ in range(G.size_b)]
    for a, row in enumerate(G.adjacency):
        for b in row:
            nbr_b[b].append(a)
    zb = {b for b in range(G.size_b) if b not in mate_b}
    za: set[int] = set()
    queue = deque(sorted(zb))
    while queue:
        b = queue.popleft()
        for a in nbr_b[b]:
            if a in za or mate_a.get(a) == b:
                continue
            za.add(a)
            nb = mate_a[a]
            if nb not in zb:
                zb.add(nb)
                queue.append(nb)
    return za, zb


def _partition_for(G: BipartiteGraph, M: Matching) -> MatchingPartition:
    za, _ = alternating_reach(G, M)
    mate_a = M.mate_a
    bprime = frozenset(mate_a.values())
    A1 = frozenset(za)
    B1 = frozenset(mate_a[a] for a in A1)
    return MatchingPartition(M, A1, frozenset(range(G.size_a)) - A1, B1, bprime - B1, bprime)


def _lacking(G: BipartiteGraph, P: MatchingPartition) -> list[int]:
    return [a for a in sorted(P.A1) if all(b in P.Bprime for b in G.adjacency[a])]


def _rotate(G: BipartiteGraph, M: Matching, target: int) -> Matching | None:
    """Shift M along an alternating path from an unmatched B-vertex to ``target``.

    Afterwards the old mate of ``target`` is unmatched.
    """
    mate_a, mate_b = M.mate_a, M.mate_b
    nbr_b: list[list[int]] = [[] for _ in range(G.size_b)]
    for a, row in enumerate(G.adjacency):
        for b in row:
            nbr_b[b].append(a)
    parent: dict[int, int] = {}  # A-vertex -> B-vertex it was reached from
    queue = deque(b for b in range(G.size_b) if b not in mate_b)
    seen_b = set(queue)
    while queue and target not in parent:
        b = queue.popleft()
        for a in nbr_b[b]:
            if a in parent or mate_a.get(a) == b:
                continue
            parent[a] = b
            nb = mate_a[a]
            if nb not in seen_b:
                seen_b.add(nb)
                queue.append(nb)
    if target not in parent:
        return None
    new = dict(mate_a)
    a = target
    while True:
        b = parent[a]
        new[a] = b
        if b not in mate_b:
            break
        a = mate_b[b]
    R = Matching(tuple(new.items()))
    if not R.is_valid(G) or len(R) != len(M):
        return None
    return R


def _exact_choice(G: BipartiteGraph, M: Matching, node_limit: int) -> Matching | None | str:
    """Choose which vertices of ``B & Z`` stay unmatched.

    A valid choice is a set ``W`` that meets the neighborhood of every vertex
    of ``A & Z`` while ``A & Z`` can still be matched into ``(B & Z) - W``.
    Branching is on the neighbors of the first vertex not yet dominated.
    Returns the new matching, ``None`` if no ``W`` exists, or ``"budget"``.
    """
    za, zb = alternating_reach(G, M)
    odd = sorted(za)
    opts = [[b for b in G.adjacency[a] if b in zb] for a in odd]
    nodes = 0
    seen: set[frozenset[int]] = set()

    def rec(W: frozenset[int]):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise TimeoutError
        forbidden = 0
        for b in W:
            forbidden |= 1 << b
        assign = match_all(opts, forbidden)
        if assign is None:
            return None
        undominated = [i for i in range(len(odd)) if not any(b in W for b in opts[i])]
        if not undominated:
            return assign
        i = min(undominated, key=lambda i: (len(opts[i]), i))
        for b in opts[i]:
            W2 = W | {b}
            if W2 in seen:
                continue
            seen.add(W2)
            res = rec(W2)
            if res is not None:
                return res
        return None

    try:
        found = rec(frozenset())
    except TimeoutError:
        return "budget"
    if found is None:
        return None
    new = dict(M.mate_a)
    new.update(zip(odd, found))
    return Matching(tuple(new.items()))


def matching_partition(G: BipartiteGraph, *, require_private: bool = True,
                       exact_node_limit: int = 200_000) -> MatchingPartition:
    """Partition certificate for a maximum matching.

    With ``require_private=False`` the alternating-reach partition of one
    maximum matching is returned as is; it always satisfies every condition
    except possibly the private-neighbor clause.
    """
    M = maximum_matching(G)
    P = _partition_for(G, M)
    if not require_private:
        bad = [v for v in P.violations(G) if v != "a1_private_neighbor"]
        if bad:
            raise PartitionError(f"partition invariants failed: {bad}", _dump(G, P))
        return P
    seen = {M.pairs}
    for _ in range(G.size_a * G.size_b + 1):
        lacking = _lacking(G, P)
        if not lacking:
            break
        R = _rotate(G, P.M, lacking[0])
        if R is None or R.pairs in seen:
            break
        seen.add(R.pairs)
        P = _partition_for(G, R)
    if _lacking(G, P):
        R = _exact_choice(G, P.M, exact_node_limit)
        if R is None:
            raise PartitionError(
                "no maximum matching gives every A1 vertex an unmatched neighbor",
                _dump(G, P))
        if R == "budget":
            raise PartitionError("exact matching search exceeded its node limit",
                                 _dump(G, P))
        P = _partition_for(G, R)
    bad = P.violations(G)
    if bad:
        raise PartitionError(f"partition invariants failed: {bad}", _dump(G, P))
    return P


def _dump(G: BipartiteGraph, P: MatchingPartition) -> dict:
    return {"size_a": G.size_a, "size_b": G.size_b,
            "adjacency": [list(r) for r in G.adjacency],
            "partition": P.to_json(), "violations": P.violations(G)}


# ---------------------------------------------------------------------------
# red-blue reduction
# ---------------------------------------------------------------------------

def incidence_bipartite(H0: UniformHypergraph, k: int) -> BipartiteGraph:
    """A = edges of ``H0``, B = its k-shadow, a ~ b iff b is inside a."""
    if k > H0.r:
        raise HypergraphError(f"shadow uniformity {k} exceeds {H0.r}")
    sh = shadow(H0, k)
    index = {m: i for i, m in enumerate(sh.masks)}
    rows = []
    for a in H0.masks:
        rows.append(tuple(i for m, i in index.items() if a & m == m))
    return BipartiteGraph(H0.m, sh.m, tuple(rows), H0.edges, sh.edges)


def g_value(H: RedBlueHypergraph, r: int) -> int:
    """Red edge count plus the number of K_r cliques of the blue part."""
    if r < H.base.r:
        raise HypergraphError(f"clique size {r} below uniformity {H.base.r}")
    return H.red.m + count_cliques(H.blue, r)


@dataclass(frozen=True)
class ReductionReport:
    h0_edges: int
    a1: int
    a2: int
    b1: int
    b2: int
    g: int
    g_dominates: bool
    a2_shadows_blue: bool
    red_clique_free: bool
    private_clause: bool
    output_pattern_free: bool | None = None

    def to_json(self) -> dict:
        return dict(self.__dict__)


def redblue_reduction(H0: UniformHypergraph, k: int, r: int,
                      pattern: UniformHypergraph | None = None
                      ) -> tuple[RedBlueHypergraph, ReductionReport]:
    """Turn an r-graph into a red-blue k-graph whose g-value is at least |E(H0)|.

    ``r`` is the clique size in the g-value and normally equals ``H0.r``.
    When ``pattern`` (a k-graph) is given, the output is also checked to be
    pattern-free.
    """
    if k > H0.r:
        raise HypergraphError(f"k={k} exceeds uniformity {H0.r}")
    G = incidence_bipartite(H0, k)
    P = matching_partition(G, require_private=False)
    labels = G.b_labels or ()
    red = [labels[b] for b in sorted(P.B1)]
    blue = [labels[b] for b in sorted(P.B2)]
    out = RedBlueHypergraph.from_parts(H0.n, k, red, blue)
    g = g_value(out, r)
    blue_set = {to_mask(e) for e in blue}
    a2_ok = all(b_mask in blue_set
                for a in P.A2
                for b_mask in (to_mask(labels[b]) for b in G.adjacency[a]))
    red_free = not any(True for _ in iter_cliques(out.red, r, k)) if r >= k else True
    pattern_free = None
    if pattern is not None:
        from .freeness import contains_copy
        pattern_free = not contains_copy(out.base, pattern)
    report = ReductionReport(
        h0_edges=H0.m, a1=len(P.A1), a2=len(P.A2), b1=len(P.B1), b2=len(P.B2), g=g,
        g_dominates=g >= H0.m, a2_shadows_blue=a2_ok, red_clique_free=red_free,
        private_clause="a1_private_neighbor" not in P.violations(G),
        output_pattern_free=pattern_free)
    return out, report


def random_bipartite(rng, max_a: int = 40, max_b: int = 40) -> BipartiteGraph:
    """Random bipartite graph: part sizes uniform in 1..max, density in [0.1, 0.9]."""
    na = rng.randint(1, max_a)
    nb = rng.randint(1, max_b)
    d = rng.uniform(0.1, 0.9)
    return BipartiteGraph.from_edges(
        na, nb, [(a, b) for a in range(na) for b in range(nb) if rng.random() < d])


def all_bipartite(max_a: int, max_b: int) -> Iterator[BipartiteGraph]:
    """Every labeled bipartite graph with |A| <= max_a and |B| <= max_b."""
    for na in range(max_a + 1):
        for nb in range(max_b + 1):
            pairs = [(a, b) for a in range(na) for b in range(nb)]
            for bits in range(1 << len(pairs)):
                yield BipartiteGraph.from_edges(
                    na, nb, [p for i, p in enumerate(pairs) if bits >> i & 1])


def partition_suite(graphs: Iterable[BipartiteGraph], keep: int | None = 3) -> dict:
    """Run matching_partition on each graph and tally the outcomes.

    A failure is recorded as ``impossible`` when the exact search proved that
    no maximum matching satisfies the private-neighbor clause, and as
    ``other`` otherwise (budget exhaustion or a broken invariant).  ``keep``
    failing instances are returned (all of them when ``keep`` is None).
    """
    total = valid = 0
    impossible: list[dict] = []
    other: list[dict] = []
    for G in graphs:
        total += 1
        try:
            P = matching_partition(G)
        except PartitionError as exc:
            entry = {"error": str(exc), "size_a": G.size_a, "size_b": G.size_b,
                     "edges": [list(e) for e in G.edges]}
            (impossible if "no maximum matching" in str(exc) else other).append(entry)
            continue
        if P.violations(G):
            other.append({"error": f"violations {P.violations(G)}",
                          "edges": [list(e) for e in G.edges]})
        else:
            valid += 1
    return {"graphs": total, "valid": valid, "hard_errors": len(impossible) + len(other),
            "proved_impossible": len(impossible), "other_errors": len(other),
            "failures": (impossible + other)[:keep]}
