"""Incremental freeness predicates used by the exhaustive search.

Each predicate answers one question: given an edge set ``present`` that is
already free, is ``present + {new}`` still free?  Only configurations that
use ``new`` need to be examined.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Collection

from .berge import _edge_orbit_reps, has_berge_through
from .hypercore import (Hypergraph, UniformHypergraph, from_mask, to_mask,
                        _pattern_order)


class SubgraphFree:
    """No copy of ``F`` (as a not necessarily induced subhypergraph)."""

    def __init__(self, F: UniformHypergraph):
        self.F = F
        self._plans = []
        for j in _edge_orbit_reps(F) if F.m else ():
            f = from_mask(F.masks[j])
            rest = [v for v in _pattern_order(F) if v not in f]
            placed = to_mask(f)
            checks = []
            for v in rest:
                placed |= 1 << v
                checks.append([from_mask(m) for m in F.masks
                               if m >> v & 1 and m & placed == m])
            pre = [from_mask(m) for k, m in enumerate(F.masks)
                   if k != j and m & to_mask(f) == m]
            self._plans.append((f, rest, checks, pre))

    def __reduce__(self):
        return (SubgraphFree, (self.F,))

    def admits(self, n: int, present: Collection[int], new: int) -> bool:
        if not self._plans:
            return self.F.n > n
        return not self.copy_through(n, present, new)

    def copy_through(self, n: int, present: Collection[int], new: int) -> bool:
        """True iff ``present + {new}`` has a copy of ``F`` using ``new``."""
        host = set(present)
        host.add(new)
        phi = [-1] * self.F.n
        nverts = from_mask(new)
        for f, rest, checks, pre in self._plans:
            for img in permutations(nverts):
                for v, w in zip(f, img):
                    phi[v] = w
                if any(to_mask(phi[u] for u in e) not in host for e in pre):
                    continue
                if self._extend(n, host, phi, rest, checks, 0, new):
                    return True
        return False

    def _extend(self, n, host, phi, rest, checks, i, used) -> bool:
        if i == len(rest):
            return True
        v = rest[i]
        for w in range(n):
            if used >> w & 1:
                continue
            phi[v] = w
            ok = True
            for e in checks[i]:
                m = 0
                for u in e:
                    m |= 1 << phi[u]
                if m not in host:
                    ok = False
                    break
            if ok and self._extend(n, host, phi, rest, checks, i + 1, used | (1 << w)):
                return True
        phi[v] = -1
        return False


class BergeFree:
    """No Berge copy of ``F``."""

    def __init__(self, F: UniformHypergraph):
        self.F = F

    def admits(self, n: int, present: Collection[int], new: int) -> bool:
        return not has_berge_through(self.F, n, list(present) + [new], new)


class PredicateFree:
    """Wrap a whole-graph predicate; slow, but needs no incremental logic."""

    def __init__(self, predicate: Callable[[UniformHypergraph], bool], r: int):
        self.predicate = predicate
        self.r = r

    def admits(self, n: int, present: Collection[int], new: int) -> bool:
        edges = [from_mask(m) for m in present] + [from_mask(new)]
        return bool(self.predicate(UniformHypergraph(n, tuple(edges), self.r)))


def contains_copy(H: Hypergraph, F: UniformHypergraph) -> bool:
    """Whole-graph subhypergraph test built from the incremental one."""
    if F.m == 0:
        return F.n <= H.n
    pred = SubgraphFree(F)
    seen: list[int] = []
    for m in H.masks:
        if pred.copy_through(H.n, seen, m):
            return True
        seen.append(m)
    return False
