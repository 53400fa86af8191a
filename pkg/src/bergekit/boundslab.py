"""Closed-form bounds, weight sums and the scaling-experiment harness.

The Turán bound used here is de Caen's,

    ex_r(n, K_s^(r)) <= C(n, r) * (1 - (n-s+1) / ((n-r+1) * C(s-1, r-1))),

evaluated in exact rationals.  Writing the two linear factors the other way
round gives 4/3 for (n, r, s) = (4, 3, 4), below the true value 3.
"""

from __future__ import annotations

import csv
import io
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from .berge import blue_edges, find_berge, has_berge_through
from .hypercore import (Hypergraph, HypergraphError, UniformHypergraph, binomial,
                        chromatic_number, count_sub_copies, from_mask, iter_sub_copies,
                        shadow, to_mask, turan_hypergraph)

CSV_COLUMNS = ["generator", "n", "r", "pattern", "edge_count", "weight_sum", "ratio", "seed"]


class AuditError(AssertionError):
    def __init__(self, message: str, dump: dict):
        super().__init__(message)
        self.dump = dump


@dataclass(frozen=True)
class BoundValue:
    value: Fraction

    @property
    def floor(self) -> int:
        return math.floor(self.value)

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator} (floor {self.floor})"


def decaen_bound(n: int, r: int, s: int) -> BoundValue:
    if not n >= s > r >= 2:
        raise HypergraphError(f"need n >= s > r >= 2, got n={n}, r={r}, s={s}")
    frac = Fraction(n - s + 1, (n - r + 1) * binomial(s - 1, r - 1))
    return BoundValue(binomial(n, r) * (1 - frac))


def alpha_constant(r: int, s: int) -> Fraction:
    """Density ceiling of the bound above; attained at n = s."""
    if not s > r >= 2:
        raise HypergraphError(f"need s > r >= 2, got r={r}, s={s}")
    return 1 - Fraction(1, (s - r + 1) * binomial(s - 1, r - 1))


class WeightTable(Mapping[int, Fraction]):
    """Nonnegative weights w(m) indexed by edge size."""

    def __init__(self, weights: Mapping[int, object]):
        table = {}
        for m, w in weights.items():
            w = Fraction(w)
            if w < 0:
                raise ValueError(f"negative weight {w} for size {m}")
            table[int(m)] = w
        self._table = dict(sorted(table.items()))

    @classmethod
    def from_csv(cls, path) -> "WeightTable":
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        if rows and rows[0] and rows[0][0].strip() == "m":
            rows = rows[1:]
        return cls({int(m): Fraction(w.strip()) for m, w in rows if m.strip()})

    @classmethod
    def power(cls, r: int, sizes: Iterable[int]) -> "WeightTable":
        return cls({m: m ** r for m in sizes})

    def __getitem__(self, m: int) -> Fraction:
        return self._table[m]

    def __iter__(self):
        return iter(self._table)

    def __len__(self) -> int:
        return len(self._table)


def weight_sum(H: Hypergraph, r: int) -> int:
    return sum(len(e) ** r for e in H.edges)


def weighted_sum(H: Hypergraph, w: Mapping[int, object]) -> Fraction:
    missing = sorted({len(e) for e in H.edges} - set(w))
    if missing:
        raise KeyError(f"weight table has no entry for edge sizes {missing}")
    return sum((Fraction(w[len(e)]) for e in H.edges), Fraction(0))


def single_edge_example(n: int) -> Hypergraph:
    if n < 1:
        raise HypergraphError("single_edge_example needs n >= 1")
    return Hypergraph(n, (tuple(range(n)),))


def claim1_audit(H: Hypergraph, F: UniformHypergraph) -> dict:
    """Per-edge count of blue r-sets against the bound for the non-blue rest.

    Inside an edge ``h`` the non-blue r-sets carry no copy of ``F`` (each would
    extend greedily to a Berge copy), so they form a K_s^(r)-free r-graph on
    |h| vertices with s = |V(F)|.  Also checked: every copy of ``F`` in the
    r-shadow uses a blue r-set.
    """
    r, s = F.r, F.n
    if find_berge(H, F) is not None:
        raise HypergraphError("claim1_audit needs a Berge-F-free host")
    short = [e for e in H.edges if len(e) < s]
    if short:
        raise HypergraphError(f"edge {short[0]} has fewer than |V(F)| = {s} vertices")
    rows = []
    blue = {to_mask(e) for e in blue_edges(H, F)}
    for e in H.edges:
        h = to_mask(e)
        total = binomial(len(e), r)
        nb = sum(1 for m in blue if m & h == m)
        row = {"edge": list(e), "size": len(e), "blue": nb, "non_blue": total - nb}
        if s > r:
            bound = decaen_bound(len(e), r, s)
            row["bound"] = f"{bound.value.numerator}/{bound.value.denominator}"
            row["ok"] = total - nb <= bound.value
        else:
            row["bound"] = None
            row["ok"] = total - nb == 0
        rows.append(row)
    copies = list(iter_sub_copies(F, shadow(H, r))) if F.m else []
    unblue = [sorted(c) for c in copies if not any(m in blue for m in c)]
    report = {"edges": rows, "shadow_copies": len(copies),
              "copies_without_blue": len(unblue),
              "ok": all(row["ok"] for row in rows) and not unblue}
    if not report["ok"]:
        raise AuditError("claim 1 audit failed", {"host": [list(e) for e in H.edges],
                                                 "report": report})
    return report


def copies_in_shadow(H: Hypergraph, F: UniformHypergraph) -> int:
    return count_sub_copies(F, shadow(H, F.r))


def copy_structure_audit(H: Hypergraph, F: UniformHypergraph) -> dict:
    """For a Berge-F-free host, each shadow copy of F has two edges in one hyperedge.

    Otherwise the copy's edges would have pairwise different containers,
    which is a Berge copy.
    """
    copies = list(iter_sub_copies(F, shadow(H, F.r)))
    bad = []
    for c in copies:
        c = sorted(c)
        shared = any(h & a == a and h & b == b
                     for i, a in enumerate(c) for b in c[i + 1:] for h in H.masks)
        if not shared:
            bad.append(c)
    return {"copies": len(copies), "violations": len(bad), "ok": not bad}


# ---------------------------------------------------------------------------
# scaling experiment
# ---------------------------------------------------------------------------

def _gen_single_edge(n, r, F, rng):
    return single_edge_example(n)


def _gen_turan(n, r, F, rng):
    return turan_hypergraph(n, r, chromatic_number(F) - 1).base


def _gen_greedy_random(n, r, F, rng, tries_per_vertex: int = 20):
    """Random edges of sizes |V(F)|..max(|V(F)|, isqrt(n)), kept while Berge-F-free."""
    lo = F.n
    hi = max(lo, math.isqrt(n))
    if lo > n:
        return Hypergraph(n, ())
    masks: list[int] = []
    seen: set[int] = set()
    for _ in range(tries_per_vertex * n):
        size = rng.randint(lo, min(hi, n))
        m = to_mask(rng.sample(range(n), size))
        if m in seen:
            continue
        seen.add(m)
        if not has_berge_through(F, n, masks + [m], m):
            masks.append(m)
    return Hypergraph(n, tuple(from_mask(m) for m in masks))


GENERATORS: dict[str, Callable] = {
    "single-edge": _gen_single_edge,
    "turan": _gen_turan,
    "greedy-random": _gen_greedy_random,
}


def ratio_ceiling(F: UniformHypergraph) -> Fraction:
    """Ceiling on weight_sum(H, r) / n^r, r = F.r, for Berge-F-free hosts H whose
    edges all have at least |V(F)| vertices.

    Each edge h holds at least (1 - alpha) C(|h|, r) blue r-sets and each blue
    r-set lies in at most |E(F)| - 1 edges, so the blue count gives
    sum C(|h|, r) <= (|E(F)| - 1) C(n, r) / (1 - alpha); converting C(|h|, r)
    to |h|^r costs at most s^r / (s)_r with s = |V(F)|.
    """
    r, s = F.r, F.n
    alpha = alpha_constant(r, s)
    falling = math.perm(s, r)
    return Fraction(F.m - 1) / (1 - alpha) * Fraction(s ** r, falling)


def scaling_experiment(F: UniformHypergraph, r: int, generators: Sequence[str],
                       n_range: Iterable[int], seed: int = 0, pattern_name: str = "F",
                       weights: Mapping[int, object] | None = None) -> list[dict]:
    """Rows of weight sums for Berge-F-free hosts; every host is re-validated."""
    rows = []
    for name in generators:
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r}; choose from {sorted(GENERATORS)}")
        for n in sorted(set(n_range)):
            rng = random.Random(seed * 1_000_003 + n)
            H = GENERATORS[name](n, r, F, rng)
            if find_berge(H, F) is not None:
                raise AuditError(f"generator {name} produced a Berge-F copy at n={n}",
                                 {"edges": [list(e) for e in H.edges]})
            ws = weight_sum(H, r)
            row = {"generator": name, "n": n, "r": r, "pattern": pattern_name,
                   "edge_count": H.m, "weight_sum": ws, "ratio": Fraction(ws, n ** r),
                   "seed": seed}
            if weights is not None:
                row["weighted_ratio"] = weighted_sum(H, weights) / n ** r
            rows.append(row)
    return rows


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{float(x):.6f}"
    return str(x)


def rows_to_csv(rows: Sequence[dict]) -> str:
    cols = list(CSV_COLUMNS)
    if rows and "weighted_ratio" in rows[0]:
        cols.append("weighted_ratio")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for row in rows:
        w.writerow([_fmt(row[c]) for c in cols])
    return buf.getvalue()


def write_csv(rows: Sequence[dict], path) -> None:
    Path(path).write_text(rows_to_csv(rows))
