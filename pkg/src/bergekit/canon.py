"""Canonical labeling of hypergraphs.

Order used throughout: a labeled hypergraph is identified with the set of
its edge bitmasks.  Two edge sets of equal size are compared through their
ascending mask sequences, lexicographically; the canonical form of ``H`` is
the relabeling whose sequence is smallest.  Equivalently, ``A < B`` iff the
smallest mask in the symmetric difference belongs to ``A``.  Because a mask
with highest bit ``k`` exceeds every mask inside ``{0..k-1}``, the search can
fix labels ``0, 1, 2, ...`` one at a time and compare "rows" (edges whose
largest label is the one just placed) with no lookahead.

The minimization is exact: the search only skips branches that are provably
no better, using the current best row and vertex twins (pairs whose
transposition is an automorphism).  This order also satisfies the condition
orderly generation needs: removing the largest edge of a canonical edge set
leaves a canonical edge set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypercore import Hypergraph, from_mask


@dataclass(frozen=True)
class CanonicalCertificate:
    """Canonical edge list plus the relabeling ``perm`` (input v -> perm[v])."""

    hypergraph: Hypergraph
    perm: tuple[int, ...]

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return self.hypergraph.edges

    @property
    def key(self) -> tuple:
        return (self.hypergraph.n, self.hypergraph.edges)


def _swap(m: int, u: int, v: int) -> int:
    if ((m >> u) ^ (m >> v)) & 1:
        m ^= (1 << u) | (1 << v)
    return m


def twin_table(n: int, masks) -> list[int]:
    """``tw[v]`` has bit ``u`` set iff transposing u and v fixes the edge set."""
    edge_set = set(masks)
    tw = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if all(_swap(m, u, v) in edge_set for m in edge_set):
                tw[u] |= 1 << v
                tw[v] |= 1 << u
    return tw


class _LabelSearch:
    def __init__(self, n: int, masks):
        self.n = n
        self.inc = [[(m, from_mask(m)) for m in masks if m >> v & 1] for v in range(n)]
        self.tw = twin_table(n, masks)
        self.label = [-1] * n

    def row(self, v: int, k: int, assigned: int) -> int:
        lab = self.label
        lab[v] = k
        allowed = assigned | (1 << v)
        out = 0
        for m, verts in self.inc[v]:
            if m & ~allowed == 0:
                rel = 0
                for u in verts:
                    rel |= 1 << lab[u]
                out |= 1 << rel
        lab[v] = -1
        return out


def _rows_of(n: int, masks) -> list[int]:
    rows = [0] * n
    for m in masks:
        rows[m.bit_length() - 1] |= 1 << m
    return rows


def is_canonical(n: int, masks) -> bool:
    """True iff the labeled edge set is minimal among all its relabelings."""
    masks = list(masks)
    target = _rows_of(n, masks)
    S = _LabelSearch(n, masks)
    lab = S.label

    def rec(k: int, assigned: int) -> bool:
        if k == n:
            return True
        tried = 0
        tgt = target[k]
        for v in range(n):
            if assigned >> v & 1 or S.tw[v] & tried:
                continue
            tried |= 1 << v
            row = S.row(v, k, assigned)
            if row != tgt:
                d = row ^ tgt
                if row & d & -d:
                    return False
                continue
            lab[v] = k
            ok = rec(k + 1, assigned | (1 << v))
            lab[v] = -1
            if not ok:
                return False
        return True

    return rec(0, 0)


def canonical_labeling(n: int, masks) -> tuple[list[int], list[int]]:
    """Return (best rows, perm) for the minimal relabeling of ``masks``."""
    masks = list(masks)
    S = _LabelSearch(n, masks)
    lab = S.label
    best_rows: list[int] = []
    best_perm: list[int] = []
    rows = [0] * n

    def rec(k: int, assigned: int, tie: bool) -> bool:
        nonlocal best_rows, best_perm
        if k == n:
            best_rows = rows[:]
            best_perm = lab[:]
            return True
        updated = False
        tried = 0
        for v in range(n):
            if assigned >> v & 1 or S.tw[v] & tried:
                continue
            tried |= 1 << v
            row = S.row(v, k, assigned)
            child_tie = False
            if tie and best_rows:
                b = best_rows[k]
                if row != b:
                    d = row ^ b
                    if not row & d & -d:
                        continue
                else:
                    child_tie = True
            rows[k] = row
            lab[v] = k
            if rec(k + 1, assigned | (1 << v), child_tie):
                updated = True
                tie = True
            lab[v] = -1
        return updated

    rec(0, 0, True)
    return best_rows, best_perm


def canonical_form(H: Hypergraph) -> CanonicalCertificate:
    if H.n == 0:
        return CanonicalCertificate(H, ())
    _, perm = canonical_labeling(H.n, H.masks)
    return CanonicalCertificate(H.relabel(perm), tuple(perm))


def canonical_key(H: Hypergraph) -> tuple:
    return canonical_form(H).key


def is_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    if G.n != H.n or sorted(G.edge_sizes()) != sorted(H.edge_sizes()):
        return False
    return canonical_form(G).edges == canonical_form(H).edges
