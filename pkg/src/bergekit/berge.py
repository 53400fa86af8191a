"""Berge copies: detection, blue r-sets, greedy realization and enumeration.

A host ``H`` contains a Berge copy of an r-graph ``F`` when there is an
injective vertex map ``phi`` and an injective assignment of host edges to the
edges of ``F`` such that ``phi(f)`` lies inside the edge assigned to ``f``.
The host edges used need not be all of ``E(H)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .canon import canonical_form
from .hypercore import (Hypergraph, HypergraphError, UniformHypergraph,
                        from_mask, iter_injections, shadow, to_mask)
from .matching import match_all


class BergeError(HypergraphError):
    pass


@dataclass(frozen=True)
class BergeEmbedding:
    """Witness of a Berge copy of ``pattern`` inside ``host``.

    ``edge_map[j]`` is an index into ``host.edges`` and holds the image of
    ``pattern.edges[j]``.
    """

    pattern: UniformHypergraph
    host: Hypergraph
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    def validate(self) -> None:
        F, H = self.pattern, self.host
        if len(self.vertex_map) != F.n or len(set(self.vertex_map)) != F.n:
            raise BergeError("vertex map is not an injection on V(F)")
        if any(not 0 <= w < H.n for w in self.vertex_map):
            raise BergeError("vertex map leaves V(H)")
        if len(self.edge_map) != F.m or len(set(self.edge_map)) != F.m:
            raise BergeError("edge map is not an injection on E(F)")
        for f, h in zip(F.masks, self.edge_map):
            img = to_mask(self.vertex_map[v] for v in from_mask(f))
            if H.masks[h] & img != img:
                raise BergeError(f"image of {from_mask(f)} not inside host edge {H.edges[h]}")

    def to_json(self) -> dict:
        return {"vertex_map": list(self.vertex_map), "edge_map": list(self.edge_map)}


@lru_cache(maxsize=256)
def _edge_orbit_reps(F: UniformHypergraph) -> tuple[int, ...]:
    """Indices of one edge per orbit of Aut(F) acting on E(F)."""
    index = {m: j for j, m in enumerate(F.masks)}
    seen: set[int] = set()
    reps = []
    auts = [list(phi) for phi in iter_injections(F, F.n, F.masks)]
    for j, m in enumerate(F.masks):
        if j in seen:
            continue
        reps.append(j)
        for phi in auts:
            seen.add(index[to_mask(phi[v] for v in from_mask(m))])
    return tuple(reps)


def _search(F: Hypergraph, host_n: int, host: Sequence[int], *, fixed: dict[int, int],
            by_degree: bool) -> Iterator[tuple[list[int], list[int]]]:
    """Yield (vertex map, host edge index per F edge) for every valid map."""
    nF = F.n
    fm = F.masks
    if len(fm) > len(host) or nF > host_n:
        return
    fdeg = [F.degree(v) for v in range(nF)]
    hdeg = [0] * host_n
    for h in host:
        for w in from_mask(h):
            hdeg[w] += 1
    free = [v for v in range(nF) if v not in fixed]
    if by_degree:
        free.sort(key=lambda v: (-fdeg[v], v))
    placed = 0
    for v in fixed:
        placed |= 1 << v
    pre_done = [j for j, m in enumerate(fm) if m & placed == m]
    closes: list[list[int]] = []
    for v in free:
        placed |= 1 << v
        closes.append([j for j, m in enumerate(fm) if m >> v & 1 and m & placed == m])

    phi = [-1] * nF
    used = 0
    for v, w in fixed.items():
        if hdeg[w] < fdeg[v]:
            return
        phi[v] = w
        used |= 1 << w
    done: list[int] = []
    conts: list[list[int]] = []

    def close(js) -> bool:
        for j in js:
            img = 0
            for u in from_mask(fm[j]):
                img |= 1 << phi[u]
            c = [i for i, h in enumerate(host) if h & img == img]
            if not c:
                return False
            done.append(j)
            conts.append(c)
        return True

    def undo(count: int) -> None:
        for _ in range(count):
            done.pop()
            conts.pop()

    if not close(pre_done) or (pre_done and match_all(conts) is None):
        return

    def rec(i: int):
        nonlocal used
        if i == len(free):
            assign = match_all(conts)
            if assign is not None:
                emap = [-1] * len(fm)
                for j, h in zip(done, assign):
                    emap[j] = h
                yield phi[:], emap
            return
        v = free[i]
        for w in range(host_n):
            if used >> w & 1 or hdeg[w] < fdeg[v]:
                continue
            phi[v] = w
            before = len(done)
            ok = close(closes[i])
            if ok and len(done) > before:
                ok = match_all(conts) is not None
            if ok:
                used |= 1 << w
                yield from rec(i + 1)
                used &= ~(1 << w)
            undo(len(done) - before)
        phi[v] = -1

    yield from rec(0)


def find_berge(H: Hypergraph, F: UniformHypergraph) -> BergeEmbedding | None:
    """Return the Berge copy of ``F`` in ``H`` with lexicographically least vertex map.

    Pattern vertices are placed in index order with host candidates ascending,
    so the first success is the lexicographically least vertex map.
    """
    for phi, emap in _search(F, H.n, H.masks, fixed={}, by_degree=False):
        emb = BergeEmbedding(F, H, tuple(phi), tuple(emap))
        emb.validate()
        return emb
    return None


def has_berge(H: Hypergraph, F: UniformHypergraph) -> bool:
    for _ in _search(F, H.n, H.masks, fixed={}, by_degree=True):
        return True
    return False


def has_berge_through(F: UniformHypergraph, host_n: int, masks: Sequence[int],
                      anchor: int) -> bool:
    """Berge-F test for hosts whose only possible copies use edge ``anchor``.

    Only vertex maps placing some edge of ``F`` inside ``anchor`` are tried, so
    the answer is exact when ``masks`` minus ``anchor`` is already Berge-F-free.
    """
    if F.m == 0:
        return F.n <= host_n
    avert = from_mask(anchor)
    for j in _edge_orbit_reps(F):
        f = from_mask(F.masks[j])
        if len(f) > len(avert):
            continue
        for img in permutations(avert, len(f)):
            fixed = dict(zip(f, img))
            for _ in _search(F, host_n, masks, fixed=fixed, by_degree=True):
                return True
    return False


def is_berge_free(H: Hypergraph, family: Sequence[UniformHypergraph]
                  ) -> tuple[bool, tuple[int, BergeEmbedding] | None]:
    """Return (free, witness); the witness names the first member found."""
    for i, F in enumerate(family):
        emb = find_berge(H, F)
        if emb is not None:
            return False, (i, emb)
    return True, None


def shadow_multiplicity(H: Hypergraph, e: Sequence[int]) -> int:
    """Number of edges of ``H`` containing the vertex set ``e``."""
    m = to_mask(e)
    return sum(1 for h in H.masks if h & m == m)


def blue_edges(H: Hypergraph, F: UniformHypergraph) -> set[tuple[int, ...]]:
    """r-sets of the r-shadow lying in at most |E(F)| - 1 edges of ``H``."""
    limit = F.m - 1
    return {e for e in shadow(H, F.r).edges if shadow_multiplicity(H, e) <= limit}


def greedy_berge_from_copy(H: Hypergraph, F: UniformHypergraph,
                           vmap: Sequence[int]) -> BergeEmbedding:
    """Realize a copy of ``F`` in the shadow as a Berge copy.

    Every edge of the copy must lie in at least |E(F)| edges of ``H``; then
    distinct containers always exist (Hall's condition holds trivially).
    """
    if len(vmap) != F.n or len(set(vmap)) != F.n:
        raise BergeError("vmap must be an injection on V(F)")
    options = []
    for f in F.edges:
        img = tuple(sorted(vmap[v] for v in f))
        mask = to_mask(img)
        c = [i for i, h in enumerate(H.masks) if h & mask == mask]
        if len(c) < F.m:
            raise BergeError(
                f"edge {img} lies in {len(c)} host edges, needs at least {F.m}")
        options.append(c)
    assign = match_all(options)
    assert assign is not None, "Hall's condition failed despite multiplicities"
    emb = BergeEmbedding(F, H, tuple(vmap), tuple(assign))
    emb.validate()
    return emb


def _enlargements(F: UniformHypergraph, k: int) -> Iterator[Hypergraph]:
    pad = k - F.r
    base_n = F.n

    def rec(j: int, fresh: int, chosen: list[int], seen: set[int]):
        if j == F.m:
            yield Hypergraph(base_n + fresh, tuple(from_mask(m) for m in chosen))
            return
        e = F.masks[j]
        old = [v for v in range(base_n + fresh) if not e >> v & 1]
        for new_cnt in range(pad + 1):
            for extra in combinations(old, pad - new_cnt):
                m = e | to_mask(extra) | to_mask(range(base_n + fresh, base_n + fresh + new_cnt))
                if m in seen:
                    continue
                seen.add(m)
                chosen.append(m)
                yield from rec(j + 1, fresh + new_cnt, chosen, seen)
                chosen.pop()
                seen.discard(m)

    yield from rec(0, 0, [], set())


def enumerate_berge_copies(F: UniformHypergraph, k: int) -> dict[tuple, UniformHypergraph]:
    """All k-uniform Berge copies of ``F`` up to isomorphism.

    Each edge of ``F`` is enlarged to ``k`` vertices using old vertices or
    fresh ones; fresh vertices are introduced in increasing order, so each
    labeled choice is produced once.  The result maps canonical keys to
    canonical k-graphs.  The vertex set is V(F) plus the fresh vertices used.
    """
    if k < F.r:
        raise BergeError(f"target uniformity {k} below pattern uniformity {F.r}")
    out: dict[tuple, UniformHypergraph] = {}
    for G in _enlargements(F, k):
        c = canonical_form(G)
        if c.key not in out:
            out[c.key] = UniformHypergraph(c.hypergraph.n, c.hypergraph.edges, k)
    return dict(sorted(out.items()))


def verify_observation(F: UniformHypergraph, l: int, k: int) -> dict:
    """Berge_k copies of F against Berge_k copies of Berge_l copies of F.

    Both families are compared as sets of canonical forms.
    """
    if not F.r <= l <= k:
        raise BergeError(f"need r <= l <= k, got r={F.r}, l={l}, k={k}")
    direct = enumerate_berge_copies(F, k)
    middle = enumerate_berge_copies(F, l)
    composed: dict[tuple, UniformHypergraph] = {}
    for G in middle.values():
        composed.update(enumerate_berge_copies(G, k))
    return {"pattern": [list(e) for e in F.edges], "l": l, "k": k,
            "direct": len(direct), "intermediate": len(middle), "composed": len(composed),
            "equal": set(direct) == set(composed)}
