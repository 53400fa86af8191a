"""Orderly branch-and-bound over r-graphs on a fixed vertex set.

Edges of the complete r-graph are indexed in increasing bitmask order.  A
search node is an edge set ``S`` that is canonical (see :mod:`bergekit.canon`);
its children add one admissible edge with index above ``max(S)`` and are kept
only if canonical.  Every isomorphism class is visited exactly once, with no
global table of seen graphs.

Objectives are monotone under edge addition, so a node can be cut when an
upper bound on everything below it cannot beat the incumbent.  Two bounds are
combined: value of ``S`` plus all remaining admissible edges, and the vertex
deletion bound ``opt(n-1) + min_v (contribution through v)``.

Parallel runs split the tree at a fixed frontier that does not depend on the
worker count; every subtree starts from the same incumbent, so merged results
(including node counts) are identical for any number of workers.
"""

from __future__ import annotations

import multiprocessing
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Protocol

from .canon import canonical_form, is_canonical
from .hypercore import UniformHypergraph, from_mask, iter_cliques, to_mask

FRONTIER_SIZE = 24
FRONTIER_DEPTH = 4


class BudgetExceeded(RuntimeError):
    pass


class Freeness(Protocol):
    def admits(self, n: int, present, new: int) -> bool: ...


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_seconds: float | None = None
    workers: int = 1

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


class EdgeCount:
    def gain(self, n, present, new) -> int:
        return 1

    def contribution(self, n, masks, v) -> int:
        return sum(1 for m in masks if m >> v & 1)

    def total(self, n, r, masks) -> int:
        return len(masks)


class CliqueCount:
    """Number of K_s^(k) copies; ``k`` is the uniformity of the searched graphs."""

    def __init__(self, s: int, k: int):
        self.s = s
        self.k = k

    def gain(self, n, present, new) -> int:
        if self.s == self.k:
            return 1
        verts = from_mask(new)
        others = [v for v in range(n) if not new >> v & 1]
        count = 0
        for extra in combinations(others, self.s - self.k):
            vs = verts + extra
            if all(to_mask(c) in present for c in combinations(vs, self.k)):
                count += 1
        return count

    def _cliques(self, n, masks):
        H = UniformHypergraph(n, tuple(from_mask(m) for m in masks), self.k)
        return list(iter_cliques(H, self.s, self.k))

    def contribution(self, n, masks, v) -> int:
        return sum(1 for c in self._cliques(n, masks) if v in c)

    def total(self, n, r, masks) -> int:
        return len(self._cliques(n, masks))

    def bounds(self, n, masks) -> tuple[int, list[int]]:
        cl = self._cliques(n, masks)
        per = [0] * n
        for c in cl:
            for v in c:
                per[v] += 1
        return len(cl), per


@dataclass
class _Node:
    edges: tuple[int, ...]
    value: int
    cands: tuple[int, ...]


class _Engine:
    def __init__(self, n, r, freeness, objective, collect_all, prev_opt, incumbent,
                 node_cap=None, deadline=None):
        self.n = n
        self.r = r
        self.all_masks = [to_mask(c) for c in sorted(combinations(range(n), r),
                                                     key=to_mask)]
        self.freeness = freeness
        self.objective = objective
        self.collect_all = collect_all
        self.prev_opt = prev_opt
        self.best = incumbent
        self.found: list[tuple[int, ...]] = []
        self.nodes = 0
        self.node_cap = node_cap
        self.deadline = deadline

    def root(self) -> _Node:
        M = self.all_masks
        cands = tuple(i for i in range(len(M)) if self.freeness.admits(self.n, (), M[i]))
        return _Node((), 0, cands)

    def bound(self, edges, value, cand_masks) -> int:
        n = self.n
        obj = self.objective
        pool = list(edges) + cand_masks
        if isinstance(obj, EdgeCount):
            b = len(pool)
            if self.prev_opt is not None:
                deg = [0] * n
                for m in pool:
                    for v in from_mask(m):
                        deg[v] += 1
                b = min(b, self.prev_opt + min(deg))
            return b
        total, per = obj.bounds(n, pool)
        if self.prev_opt is not None:
            total = min(total, self.prev_opt + min(per))
        return total

    def _cut(self, b) -> bool:
        if self.collect_all:
            return b < self.best
        return b <= self.best

    def visit(self, node: _Node) -> None:
        self.nodes += 1
        if self.node_cap is not None and self.nodes > self.node_cap:
            raise BudgetExceeded("node budget exhausted")
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("time budget exhausted")
        if node.value > self.best:
            self.best = node.value
            self.found = [node.edges]
        elif node.value == self.best and self.collect_all:
            self.found.append(node.edges)

    def children(self, node: _Node, prune: bool = True) -> Iterator[_Node]:
        M = self.all_masks
        n = self.n
        present = set(node.edges)
        cands = node.cands
        for pos, i in enumerate(cands):
            e = M[i]
            edges = node.edges + (e,)
            if not is_canonical(n, edges):
                continue
            present.add(e)
            rest = tuple(j for j in cands[pos + 1:] if self.freeness.admits(n, present, M[j]))
            value = node.value + self.objective.gain(n, present, e)
            present.discard(e)
            if prune and self._cut(self.bound(edges, value, [M[j] for j in rest])):
                continue
            yield _Node(edges, value, rest)

    def dfs(self, node: _Node) -> None:
        self.visit(node)
        for child in self.children(node):
            self.dfs(child)


def greedy_lower_bound(n, r, freeness, objective, tries: int = 8, seed: int = 0):
    """Best of a few deterministic greedy maximal free graphs: (value, masks)."""
    masks = [to_mask(c) for c in sorted(combinations(range(n), r), key=to_mask)]
    rng = random.Random(seed)
    best = (-1, ())
    for t in range(tries):
        order = masks[:] if t == 0 else rng.sample(masks, len(masks))
        present: list[int] = []
        pset: set[int] = set()
        value = 0
        for m in order:
            if freeness.admits(n, pset, m):
                pset.add(m)
                present.append(m)
                value += objective.gain(n, pset, m)
        if value > best[0]:
            best = (value, tuple(present))
    return best


@dataclass
class _TaskResult:
    best: int
    found: list
    nodes: int
    complete: bool


def _run_task(args) -> _TaskResult:
    (n, r, freeness, objective, collect_all, prev_opt, incumbent, node_cap,
     deadline, node) = args
    eng = _Engine(n, r, freeness, objective, collect_all, prev_opt, incumbent,
                  node_cap, deadline)
    try:
        eng.dfs(node)
        complete = True
    except BudgetExceeded:
        complete = False
    return _TaskResult(eng.best, eng.found, eng.nodes, complete)


@dataclass
class SearchOutcome:
    value: int
    witnesses: list[UniformHypergraph]
    nodes: int
    exhausted: bool


def maximize(n: int, r: int, freeness: Freeness, objective, *, collect_all: bool = False,
             prev_opt: int | None = None, budget: SearchBudget | None = None
             ) -> SearchOutcome:
    """Exact maximum of ``objective`` over free r-graphs on ``n`` vertices."""
    budget = budget or SearchBudget()
    deadline = (time.monotonic() + budget.max_seconds) if budget.max_seconds else None
    lb_value, lb_masks = greedy_lower_bound(n, r, freeness, objective)
    incumbent = lb_value - 1 if collect_all else lb_value
    eng = _Engine(n, r, freeness, objective, collect_all, prev_opt, incumbent)
    level = [eng.root()]
    depth = 0
    while level and len(level) < FRONTIER_SIZE and depth < FRONTIER_DEPTH:
        nxt = []
        for node in level:
            eng.visit(node)
            nxt.extend(eng.children(node))
        level = nxt
        depth += 1
    cap = None
    if budget.max_nodes is not None:
        cap = max(1, (budget.max_nodes - eng.nodes) // max(1, len(level)))
    tasks = [(n, r, freeness, objective, collect_all, prev_opt, incumbent, cap,
              deadline, node) for node in level]
    if budget.workers > 1 and len(tasks) > 1:
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(budget.workers, mp_context=ctx) as ex:
            results = list(ex.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]

    best = max([eng.best] + [res.best for res in results])
    nodes = eng.nodes + sum(res.nodes for res in results)
    complete = all(res.complete for res in results)
    found: list[tuple[int, ...]] = []
    if eng.best == best:
        found.extend(eng.found)
    for res in results:
        if res.best == best:
            found.extend(res.found)
    if not collect_all:
        found = found[:1]
        if not found and best == lb_value:
            found = [lb_masks]
    witnesses = {}
    for masks in found:
        c = canonical_form(UniformHypergraph(n, tuple(from_mask(m) for m in masks), r))
        witnesses[c.key] = UniformHypergraph(n, c.hypergraph.edges, r)
    return SearchOutcome(best, [witnesses[k] for k in sorted(witnesses)], nodes, complete)


def orderly(n: int, r: int, freeness: Freeness,
            budget: SearchBudget | None = None) -> Iterator[UniformHypergraph]:
    """Yield one canonical representative of every free r-graph class."""
    budget = budget or SearchBudget()
    deadline = (time.monotonic() + budget.max_seconds) if budget.max_seconds else None
    eng = _Engine(n, r, freeness, EdgeCount(), False, None, 0,
                  budget.max_nodes, deadline)

    def rec(node):
        eng.visit(node)
        yield UniformHypergraph(n, tuple(from_mask(m) for m in node.edges), r)
        for child in eng.children(node, prune=False):
            yield from rec(child)

    yield from rec(eng.root())
