"""Exact extremal numbers, Ramsey numbers and the inequality verifiers.

All extremal values come from :func:`bergekit.search.maximize`.  The value for
``n - 1`` vertices feeds the vertex-deletion bound at ``n``, so each call first
solves the smaller instances (results are cached per process).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Union

from .berge import find_berge
from .freeness import BergeFree, PredicateFree, SubgraphFree, contains_copy
from .hypercore import (HypergraphError, UniformHypergraph, chromatic_number,
                        clique_replacement, count_cliques, expansion, from_mask, to_mask,
                        turan_hypergraph)
from .search import (CliqueCount, EdgeCount, SearchBudget, maximize,
                     orderly)

# largest n searched exactly without an explicit override, by uniformity
GRID = {1: 9, 2: 9, 3: 7}
GRID_DEFAULT = 6


class GridError(ValueError):
    pass


class VerificationError(AssertionError):
    """An inequality that must hold failed; ``report`` carries the witnesses."""

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


def grid_limit(r: int) -> int:
    return GRID.get(r, GRID_DEFAULT)


def check_grid(n: int, r: int, force: bool = False) -> None:
    if n < 0 or r < 1:
        raise GridError(f"invalid parameters n={n}, r={r}")
    if not force and n > grid_limit(r):
        raise GridError(f"n={n} is outside the exact grid for r={r} "
                        f"(n <= {grid_limit(r)}); pass force=True to run anyway")


def _edges_json(H: UniformHypergraph) -> list[list[int]]:
    return [list(e) for e in H.edges]


@dataclass(frozen=True)
class ExtremalResult:
    value: int
    witnesses: tuple[UniformHypergraph, ...]
    nodes: int
    exhausted: bool

    def to_json(self) -> dict:
        return {"value": self.value, "exhausted": self.exhausted, "nodes": self.nodes,
                "witnesses": [_edges_json(W) for W in self.witnesses]}


def enumerate_uniform(n: int, r: int,
                      predicate: Union[Callable[[UniformHypergraph], bool], object, None] = None,
                      budget: SearchBudget | None = None) -> Iterator[UniformHypergraph]:
    """One canonical representative per isomorphism class passing ``predicate``.

    ``predicate`` is either a whole-graph callable or an incremental freeness
    object with an ``admits`` method; it must be closed under edge removal.
    Budget exhaustion raises :class:`BudgetExceeded`.
    """
    if predicate is None:
        free = PredicateFree(lambda H: True, r)
    elif hasattr(predicate, "admits"):
        free = predicate
    else:
        free = PredicateFree(predicate, r)
    yield from orderly(n, r, free, budget)


def _freeness(kind: str, F: UniformHypergraph):
    return BergeFree(F) if kind == "berge" else SubgraphFree(F)


def _objective(kind: str, r: int, s: int | None):
    return CliqueCount(s, r) if kind == "generalized" else EdgeCount()


@lru_cache(maxsize=1024)
def _solve(kind: str, n: int, r: int, F: UniformHypergraph, s: int | None,
           collect_all: bool, budget: SearchBudget) -> ExtremalResult:
    prev = None
    if n > 1:
        below = _solve(kind, n - 1, r, F, s, False, budget)
        if below.exhausted:
            prev = below.value
    out = maximize(n, r, _freeness(kind, F), _objective(kind, r, s),
                   collect_all=collect_all, prev_opt=prev, budget=budget)
    res = ExtremalResult(out.value, tuple(out.witnesses), out.nodes, out.exhausted)
    _check_witnesses(kind, res, F, s)
    return res


def _check_witnesses(kind: str, res: ExtremalResult, F: UniformHypergraph,
                     s: int | None) -> None:
    for W in res.witnesses:
        if kind == "berge":
            ok = find_berge(W, F) is None
        else:
            ok = not contains_copy(W, F)
        value = count_cliques(W, s) if kind == "generalized" else W.m
        if not ok or value != res.value:
            raise AssertionError(f"witness {W.edges} fails its defining predicate")


def _run(kind, n, r, F, s, collect_all, budget, force) -> ExtremalResult:
    check_grid(n, r, force)
    return _solve(kind, n, r, F, s, collect_all, budget or SearchBudget())


def ex_uniform(n: int, k: int, F: UniformHypergraph, *, collect_all: bool = False,
               budget: SearchBudget | None = None, force: bool = False) -> ExtremalResult:
    """Maximum edge count of an F-free k-graph on ``n`` vertices."""
    if F.r != k:
        raise HypergraphError(f"pattern is {F.r}-uniform, expected {k}")
    return _run("uniform", n, k, F, None, collect_all, budget, force)


def ex_berge(n: int, r: int, F: UniformHypergraph, *, collect_all: bool = False,
             budget: SearchBudget | None = None, force: bool = False) -> ExtremalResult:
    """Maximum edge count of a Berge-F-free r-graph on ``n`` vertices."""
    return _run("berge", n, r, F, None, collect_all, budget, force)


def ex_generalized(n: int, k: int, s: int, F: UniformHypergraph, *,
                   collect_all: bool = False, budget: SearchBudget | None = None,
                   force: bool = False) -> ExtremalResult:
    """Maximum number of K_s^(k) copies in an F-free k-graph on ``n`` vertices."""
    if s < k:
        raise HypergraphError(f"clique size {s} below uniformity {k}")
    if F.r != k:
        raise HypergraphError(f"pattern is {F.r}-uniform, expected {k}")
    return _run("generalized", n, k, F, s, collect_all, budget, force)


# ---------------------------------------------------------------------------
# Ramsey numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RamseyResult:
    value: int | None  # None when every N up to cap has a good coloring
    cap: int
    witness_n: int
    witness: tuple[tuple[tuple[int, ...], int], ...]  # (edge, color) on K_{witness_n}
    nodes: int

    def to_json(self) -> dict:
        return {"value": self.value if self.value is not None else "exceeds cap",
                "cap": self.cap, "witness_n": self.witness_n,
                "witness": [[list(e), c] for e, c in self.witness], "nodes": self.nodes}


def _good_coloring(F: UniformHypergraph, N: int) -> tuple[list[tuple[int, int]] | None, int]:
    """A 2-coloring of K_N^(r) with no monochromatic F, plus nodes used."""
    edges = [to_mask(c) for c in sorted(combinations(range(N), F.r), key=to_mask)]
    pred = SubgraphFree(F)
    classes: tuple[set[int], set[int]] = (set(), set())
    colors: list[int] = []
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if i == len(edges):
            return True
        # the first edge is fixed to color 0: swapping colors maps solutions to solutions
        for c in ((0,) if i == 0 else (0, 1)):
            if pred.copy_through(N, classes[c], edges[i]):
                continue
            classes[c].add(edges[i])
            colors.append(c)
            if rec(i + 1):
                return True
            colors.pop()
            classes[c].discard(edges[i])
        return False

    if rec(0):
        return list(zip(edges, colors)), nodes
    return None, nodes


def validate_coloring(F: UniformHypergraph, N: int, coloring) -> bool:
    """True iff ``coloring`` ((edge, color) pairs) covers K_N^(r) with no monochromatic F."""
    got = sorted(tuple(e) for e, _ in coloring)
    if got != list(combinations(range(N), F.r)):
        return False
    for col in (0, 1):
        part = tuple(sorted(tuple(e) for e, c in coloring if c == col))
        if contains_copy(UniformHypergraph(N, part, F.r), F):
            return False
    return True


def ramsey_number(F: UniformHypergraph, cap: int) -> RamseyResult:
    """Least N <= cap with every 2-coloring of K_N^(r) containing a monochromatic F."""
    if F.m == 0:
        raise HypergraphError("pattern has no edges")
    if cap < F.r:
        raise HypergraphError(f"cap {cap} below uniformity {F.r}")
    witness_n, witness, nodes = 0, [], 0
    for N in range(1, cap + 1):
        col, used = _good_coloring(F, N)
        nodes += used
        if col is None:
            break
        witness_n, witness = N, col
    else:
        N = None
    wit = tuple((from_mask(m), c) for m, c in witness)
    if not validate_coloring(F, witness_n, wit):
        raise AssertionError("stored Ramsey witness coloring does not validate")
    return RamseyResult(N, cap, witness_n, wit, nodes)


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def _verdict(report: dict, checks: dict[str, bool], exact: bool) -> dict:
    report["checks"] = checks
    if not exact:
        report["status"] = "inconclusive"
        return report
    report["status"] = "pass" if all(checks.values()) else "fail"
    if report["status"] == "fail":
        failed = [k for k, v in checks.items() if not v]
        raise VerificationError(f"failed checks: {failed}", report)
    return report


def verify_sandwich(n: int, k: int, r: int, F: UniformHypergraph, *,
                    budget: SearchBudget | None = None, force: bool = False) -> dict:
    """ex_k(n, K_r^(k), F) <= ex_r(n, Berge-F) <= ex_k(n, K_r^(k), F) + ex_k(n, F)."""
    if k > r:
        raise HypergraphError(f"k={k} exceeds r={r}")
    gen = ex_generalized(n, k, r, F, budget=budget, force=force)
    mid = ex_berge(n, r, F, budget=budget, force=force)
    top = ex_uniform(n, k, F, budget=budget, force=force)
    lifted = [clique_replacement(W, r) for W in gen.witnesses]
    checks = {
        "lower<=middle": gen.value <= mid.value,
        "middle<=upper": mid.value <= gen.value + top.value,
        "replacement_berge_free": all(find_berge(L, F) is None for L in lifted),
        "replacement_size": all(L.m == gen.value for L in lifted),
    }
    report = {
        "n": n, "k": k, "r": r, "pattern": _edges_json(F),
        "generalized": gen.to_json(), "berge": mid.to_json(), "uniform": top.to_json(),
        "lower": gen.value, "middle": mid.value, "upper": gen.value + top.value,
        "replacement": [_edges_json(L) for L in lifted],
    }
    return _verdict(report, checks, gen.exhausted and mid.exhausted and top.exhausted)


def verify_expansion_chain(n: int, r: int, k: int, F0: UniformHypergraph, *,
                           budget: SearchBudget | None = None, force: bool = False) -> dict:
    """ex_r(n, Berge-F0) <= ex_r(n, Berge-F0^{+k}) <= ex_r(n, F0^{+r})."""
    if F0.r != 2:
        raise HypergraphError("F0 must be a 2-graph")
    if not 2 <= k <= r:
        raise HypergraphError(f"need 2 <= k <= r, got k={k}, r={r}")
    Fk = expansion(F0, k)
    Fr = expansion(F0, r)
    a = ex_berge(n, r, F0, budget=budget, force=force)
    b = ex_berge(n, r, Fk, budget=budget, force=force)
    c = ex_uniform(n, r, Fr, budget=budget, force=force)
    checks = {"first<=middle": a.value <= b.value, "middle<=last": b.value <= c.value}
    m = chromatic_number(F0)
    report = {
        "n": n, "r": r, "k": k, "pattern": _edges_json(F0), "chromatic_number": m,
        "berge_F0": a.to_json(), "berge_expansion_k": b.to_json(),
        "expansion_r": c.to_json(),
        "chain": [a.value, b.value, c.value],
    }
    if m > r > k:
        T = turan_hypergraph(n, r, m - 1)
        report["turan_lower_bound"] = T.m
        # T^r(n, m-1) admits no Berge-F0: a copy would properly (m-1)-color F0
        checks["turan_berge_free"] = find_berge(T, F0) is None
        checks["turan<=middle"] = T.m <= b.value
    return _verdict(report, checks, a.exhausted and b.exhausted and c.exhausted)

