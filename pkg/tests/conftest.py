import random

import pytest
from hypothesis import strategies as st

from bergekit.hgio import load_pattern
from bergekit.hypercore import Hypergraph, UniformHypergraph, complete_uniform, make_uniform


@pytest.fixture(scope="session")
def pat():
    """Corpus patterns by short name."""
    return {name: load_pattern(f"{name}.hg")
            for name in ("k2", "p3", "k3", "p4", "c4", "k4", "single3", "matching2x3")}


K3 = make_uniform(3, [(0, 1), (0, 2), (1, 2)])
P3 = make_uniform(3, [(0, 1), (1, 2)])
P4 = make_uniform(4, [(0, 1), (1, 2), (2, 3)])
K4 = complete_uniform(4, 2)


@st.composite
def hypergraphs(draw, max_n=6, max_m=6, min_size=1, max_size=None):
    n = draw(st.integers(1, max_n))
    hi = min(n, max_size or n)
    lo = min(min_size, hi)
    edges = draw(st.lists(
        st.frozensets(st.integers(0, n - 1), min_size=lo, max_size=hi),
        max_size=max_m, unique=True))
    return Hypergraph(n, tuple(tuple(sorted(e)) for e in edges))


@st.composite
def uniform_graphs(draw, r, max_n=6, max_m=8):
    n = draw(st.integers(r, max_n))
    edges = draw(st.lists(st.frozensets(st.integers(0, n - 1), min_size=r, max_size=r),
                          max_size=max_m, unique=True))
    return UniformHypergraph(n, tuple(tuple(sorted(e)) for e in edges), r)


def random_uniform(rng: random.Random, n: int, r: int, p: float) -> UniformHypergraph:
    from itertools import combinations
    return UniformHypergraph(n, tuple(e for e in combinations(range(n), r)
                                      if rng.random() < p), r)


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance lines so they survive output capture."""
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[i])
