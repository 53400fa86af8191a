"""Immutable hypergraph values, standard constructions, shadows and counting.

Vertices are the integers ``0..n-1``.  Every edge is kept twice: as an
ascending tuple (for display and serialization) and as an integer bitmask
(bit ``v`` set iff vertex ``v`` is in the edge) so that containment tests are
single machine operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence


class HypergraphError(ValueError):
    """Raised for malformed hypergraphs or invalid construction parameters."""


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph with distinct, nonempty edges.

    The constructor normalizes: each edge is sorted ascending and the edge
    list is sorted lexicographically.  Duplicate edges are rejected.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise HypergraphError(f"negative vertex count {self.n}")
        norm = []
        for e in self.edges:
            t = tuple(sorted(e))
            if not t:
                raise HypergraphError("empty edge")
            if len(set(t)) != len(t):
                raise HypergraphError(f"repeated vertex in edge {t}")
            if t[0] < 0 or t[-1] >= self.n:
                raise HypergraphError(f"vertex out of range in edge {t} (n={self.n})")
            norm.append(t)
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise HypergraphError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "masks", tuple(to_mask(e) for e in norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        bit = 1 << v
        return sum(1 for m in self.masks if m & bit)

    def edge_sizes(self) -> list[int]:
        return [len(e) for e in self.edges]

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image under the vertex bijection ``v -> perm[v]``."""
        return self._rebuild([[perm[v] for v in e] for e in self.edges])

    def _rebuild(self, edges) -> "Hypergraph":
        return Hypergraph(self.n, tuple(tuple(e) for e in edges))


@dataclass(frozen=True)
class UniformHypergraph(Hypergraph):
    """An r-graph: every edge has exactly ``r`` vertices."""

    r: int

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.r < 1:
            raise HypergraphError(f"uniformity must be >= 1, got {self.r}")
        for e in self.edges:
            if len(e) != self.r:
                raise HypergraphError(f"edge {e} has size {len(e)}, expected {self.r}")

    @property
    def base(self) -> Hypergraph:
        return Hypergraph(self.n, self.edges)

    def _rebuild(self, edges) -> "UniformHypergraph":
        return UniformHypergraph(self.n, tuple(tuple(e) for e in edges), self.r)


RED = "red"
BLUE = "blue"


@dataclass(frozen=True)
class RedBlueHypergraph:
    """A uniform hypergraph with a red/blue color on each edge.

    ``colors[i]`` belongs to ``base.edges[i]``.
    """

    base: UniformHypergraph
    colors: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.base.m:
            raise HypergraphError(
                f"{len(self.colors)} colors for {self.base.m} edges")
        bad = [c for c in self.colors if c not in (RED, BLUE)]
        if bad:
            raise HypergraphError(f"unknown colors {bad}")

    @classmethod
    def from_parts(cls, n: int, r: int, red: Iterable[Sequence[int]],
                   blue: Iterable[Sequence[int]]) -> "RedBlueHypergraph":
        tagged = {tuple(sorted(e)): RED for e in red}
        for e in blue:
            t = tuple(sorted(e))
            if t in tagged:
                raise HypergraphError(f"edge {t} colored twice")
            tagged[t] = BLUE
        base = UniformHypergraph(n, tuple(tagged), r)
        return cls(base, tuple(tagged[e] for e in base.edges))

    def part(self, color: str) -> UniformHypergraph:
        es = tuple(e for e, c in zip(self.base.edges, self.colors) if c == color)
        return UniformHypergraph(self.base.n, es, self.base.r)

    @property
    def red(self) -> UniformHypergraph:
        return self.part(RED)

    @property
    def blue(self) -> UniformHypergraph:
        return self.part(BLUE)


def make_hypergraph(n: int, edge_list: Iterable[Iterable[int]]) -> Hypergraph:
    return Hypergraph(n, tuple(tuple(e) for e in edge_list))


def make_uniform(n: int, edge_list: Iterable[Iterable[int]],
                 r: int | None = None) -> UniformHypergraph:
    """Build an r-graph; ``r`` is inferred from the edges when omitted."""
    edges = tuple(tuple(e) for e in edge_list)
    if r is None:
        if not edges:
            raise HypergraphError("cannot infer uniformity of an edgeless hypergraph")
        r = len(edges[0])
    return UniformHypergraph(n, edges, r)


def as_uniform(H: Hypergraph, r: int | None = None) -> UniformHypergraph:
    if isinstance(H, UniformHypergraph) and (r is None or r == H.r):
        return H
    return make_uniform(H.n, H.edges, r)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def shadow(H: Hypergraph, r: int) -> UniformHypergraph:
    """The r-shadow: all r-sets lying inside at least one edge of ``H``."""
    if r < 1:
        raise HypergraphError("shadow uniformity must be >= 1")
    out = set()
    for e in H.edges:
        if len(e) >= r:
            out.update(combinations(e, r))
    return UniformHypergraph(H.n, tuple(out), r)


def complete_uniform(s: int, r: int) -> UniformHypergraph:
    if r < 1 or s < r:
        raise HypergraphError(f"complete_uniform needs s >= r >= 1 (s={s}, r={r})")
    return UniformHypergraph(s, tuple(combinations(range(s), r)), r)


def turan_parts(n: int, p: int) -> list[range]:
    """Balanced contiguous parts, larger parts first."""
    q, rem = divmod(n, p)
    parts, start = [], 0
    for i in range(p):
        size = q + 1 if i < rem else q
        parts.append(range(start, start + size))
        start += size
    return parts


def turan_hypergraph(n: int, r: int, p: int) -> UniformHypergraph:
    """T^r(n, p): r-sets meeting each of ``p`` balanced parts at most once."""
    if n < 1 or p < 1 or r < 1:
        raise HypergraphError(f"turan_hypergraph needs n, r, p >= 1 (got {n}, {r}, {p})")
    part_of = [0] * n
    for i, part in enumerate(turan_parts(n, p)):
        for v in part:
            part_of[v] = i
    edges = tuple(e for e in combinations(range(n), r)
                  if len({part_of[v] for v in e}) == r)
    return UniformHypergraph(n, edges, r)


def expansion(F0: UniformHypergraph, r: int) -> UniformHypergraph:
    """Pad each edge of ``F0`` to size ``r`` with its own fresh vertices.

    Fresh vertices are numbered from ``F0.n`` upward, edge by edge in the
    normalized edge order.
    """
    if r < F0.r:
        raise HypergraphError(f"expansion target {r} below pattern uniformity {F0.r}")
    pad = r - F0.r
    nxt = F0.n
    edges = []
    for e in F0.edges:
        edges.append(e + tuple(range(nxt, nxt + pad)))
        nxt += pad
    return UniformHypergraph(nxt, tuple(edges), r)


def star_construction(n: int, r: int, t: int) -> UniformHypergraph:
    """All r-sets containing the pinned vertices ``0..t-1``."""
    if not 0 <= t <= r <= n:
        raise HypergraphError(f"star_construction needs 0 <= t <= r <= n (t={t}, r={r}, n={n})")
    pinned = tuple(range(t))
    edges = tuple(pinned + c for c in combinations(range(t, n), r - t))
    return UniformHypergraph(n, edges, r)


def iter_cliques(H: Hypergraph, s: int, k: int) -> Iterator[tuple[int, ...]]:
    """s-sets of vertices all of whose k-subsets are edges of ``H``."""
    present = set(H.masks)
    n = H.n

    def extend(chosen: list[int], start: int):
        if len(chosen) == s:
            yield tuple(chosen)
            return
        for v in range(start, n - (s - len(chosen)) + 1):
            bit = 1 << v
            ok = True
            if len(chosen) >= k - 1:
                for sub in combinations(chosen, k - 1):
                    if to_mask(sub) | bit not in present:
                        ok = False
                        break
            if ok:
                chosen.append(v)
                yield from extend(chosen, v + 1)
                chosen.pop()

    yield from extend([], 0)


def clique_replacement(G: UniformHypergraph, r: int) -> UniformHypergraph:
    """r-graph whose edges are the vertex sets of the K_r^(k) copies in ``G``."""
    if r < G.r:
        raise HypergraphError(f"clique size {r} below uniformity {G.r}")
    return UniformHypergraph(G.n, tuple(iter_cliques(G, r, G.r)), r)


def count_cliques(H: UniformHypergraph, s: int) -> int:
    if s < H.r:
        raise HypergraphError(f"clique size {s} below uniformity {H.r}")
    if s == H.r:
        return H.m
    return sum(1 for _ in iter_cliques(H, s, H.r))


# ---------------------------------------------------------------------------
# embeddings and copy counting
# ---------------------------------------------------------------------------

def _pattern_order(P: Hypergraph) -> list[int]:
    """Vertex order that closes pattern edges as early as possible."""
    deg = [P.degree(v) for v in range(P.n)]
    order: list[int] = []
    placed = 0
    remaining = set(range(P.n))
    while remaining:
        def score(v):
            bit = 1 << v
            touching = sum(1 for m in P.masks if m & bit and m & placed)
            return (touching, deg[v], -v)
        v = max(remaining, key=score)
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def iter_injections(P: Hypergraph, host_n: int, host_masks: Iterable[int],
                    fixed: dict[int, int] | None = None) -> Iterator[list[int]]:
    """Injective maps V(P) -> [host_n] sending every edge of P onto a host edge.

    ``fixed`` pre-assigns some pattern vertices.  Yields ``phi`` with
    ``phi[v]`` the image of pattern vertex ``v``; the list is reused, copy it
    if it must outlive the iteration step.
    """
    present = set(host_masks)
    fixed = fixed or {}
    hdeg = [0] * host_n
    for m in present:
        for v in from_mask(m):
            hdeg[v] += 1
    pdeg = [P.degree(v) for v in range(P.n)]
    order = [v for v in _pattern_order(P) if v not in fixed]
    phi = [-1] * P.n
    used = 0
    for v, w in fixed.items():
        phi[v] = w
        used |= 1 << w
    # edges to check when the i-th free vertex is placed
    placed = 0
    for v in fixed:
        placed |= 1 << v
    for e in P.masks:
        if e & placed == e:
            if to_mask(phi[u] for u in from_mask(e)) not in present:
                return
    checks = []
    for v in order:
        placed |= 1 << v
        checks.append([from_mask(e) for e in P.masks if e >> v & 1 and e & placed == e])

    def rec(i: int):
        nonlocal used
        if i == len(order):
            yield phi
            return
        v = order[i]
        for w in range(host_n):
            if used >> w & 1 or hdeg[w] < pdeg[v]:
                continue
            phi[v] = w
            if all(to_mask(phi[u] for u in e) in present for e in checks[i]):
                used |= 1 << w
                yield from rec(i + 1)
                used &= ~(1 << w)
        phi[v] = -1

    yield from rec(0)


def count_injections(P: Hypergraph, H: Hypergraph) -> int:
    return sum(1 for _ in iter_injections(P, H.n, H.masks))


def automorphism_count(P: Hypergraph) -> int:
    return count_injections(P, P)


def count_sub_copies(Hpat: Hypergraph, Hhost: Hypergraph) -> int:
    """Number of subhypergraphs of ``Hhost`` isomorphic to ``Hpat``."""
    total = count_injections(Hpat, Hhost)
    aut = automorphism_count(Hpat)
    q, rem = divmod(total, aut)
    assert rem == 0, f"{total} injections not divisible by |Aut| = {aut}"
    return q


def iter_sub_copies(Hpat: Hypergraph, Hhost: Hypergraph) -> Iterator[frozenset[int]]:
    """Distinct copies of ``Hpat`` in ``Hhost``, each as a set of host edge masks.

    Copies are told apart by (vertex image, edge image); two injections that
    differ by an automorphism give the same copy.
    """
    seen = set()
    for phi in iter_injections(Hpat, Hhost.n, Hhost.masks):
        img = frozenset(to_mask(phi[u] for u in e) for e in Hpat.edges)
        key = (to_mask(phi), img)
        if key not in seen:
            seen.add(key)
            yield img


def chromatic_number(G: Hypergraph) -> int:
    """Least number of colors with no monochromatic edge (exhaustive search)."""
    if G.n == 0:
        return 0
    if any(len(e) == 1 for e in G.edges):
        raise HypergraphError("a graph with a loop edge has no proper coloring")
    nbr_edges = [[e for e in G.edges if v in e] for v in range(G.n)]
    order = sorted(range(G.n), key=lambda v: -len(nbr_edges[v]))

    def colorable(k: int) -> bool:
        col = [-1] * G.n

        def rec(i: int, used: int) -> bool:
            if i == G.n:
                return True
            v = order[i]
            # colors beyond the first unused one are symmetric
            for c in range(min(k, used + 1)):
                col[v] = c
                if all(any(col[u] != c for u in e if u != v)
                       for e in nbr_edges[v]):
                    if rec(i + 1, max(used, c + 1)):
                        return True
            col[v] = -1
            return False

        return rec(0, 0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
