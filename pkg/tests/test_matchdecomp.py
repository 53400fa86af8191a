import random

import pytest
from hypothesis import given, settings, strategies as st

from bergekit import oracles
from bergekit.extremal import ex_berge
from bergekit.freeness import contains_copy
from bergekit.hypercore import (HypergraphError, RedBlueHypergraph, complete_uniform,
                                make_uniform)
from bergekit.matchdecomp import (BipartiteGraph, PartitionError, all_bipartite,
                                  alternating_reach, find_augmenting_path, g_value,
                                  incidence_bipartite, matching_partition, maximum_matching,
                                  partition_suite, random_bipartite, redblue_reduction)

from conftest import K3, K4

# The smallest graphs with no certificate have three A-vertices and four B-vertices.
NO_CERTIFICATE = BipartiteGraph(3, 4, ((1, 3), (0, 2), (0, 1)))


def test_maximum_matching_examples():
    cycle = BipartiteGraph.from_edges(3, 3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)])
    assert len(maximum_matching(cycle)) == 3
    star = BipartiteGraph(1, 3, ((0, 1, 2),))
    assert len(maximum_matching(star)) == 1
    full = BipartiteGraph(2, 3, ((0, 1, 2), (0, 1, 2)))
    assert len(maximum_matching(full)) == 2


def test_bipartite_validation():
    with pytest.raises(ValueError):
        BipartiteGraph(2, 2, ((0,),))
    with pytest.raises(ValueError):
        BipartiteGraph(1, 2, ((2,),))


bipartite = st.builds(
    lambda na, nb, bits: BipartiteGraph.from_edges(
        na, nb, [(a, b) for a in range(na) for b in range(nb) if bits >> (a * nb + b) & 1]),
    st.integers(0, 4), st.integers(0, 4), st.integers(0, 2 ** 16 - 1))


@settings(max_examples=200, deadline=None)
@given(bipartite)
def test_maximum_matching_oracle(G):
    M = maximum_matching(G)
    assert M.is_valid(G)
    assert find_augmenting_path(G, M) is None
    assert len(M) == oracles.maximum_matching_size(G.size_a, G.size_b, G.edges)


def test_partition_examples():
    P = matching_partition(BipartiteGraph(1, 2, ((0, 1),)))
    assert P.A1 == {0} and len(P.B1) == 1 and not P.A2 and not P.B2
    P = matching_partition(BipartiteGraph(2, 1, ((0,), (0,))))
    assert P.A1 == frozenset() and P.A2 == {0, 1} and P.B2 == {0}


def test_counterexample_has_no_certificate():
    assert not oracles.partition_exists(3, 4, NO_CERTIFICATE.edges)
    with pytest.raises(PartitionError, match="no maximum matching") as info:
        matching_partition(NO_CERTIFICATE)
    assert info.value.dump["adjacency"] == [[1, 3], [0, 2], [0, 1]]
    # the weaker partition still exists and fails only the private clause
    P = matching_partition(NO_CERTIFICATE, require_private=False)
    assert P.violations(NO_CERTIFICATE) == ["a1_private_neighbor"]


def test_partition_agrees_with_oracle_small():
    graphs = list(all_bipartite(2, 3)) + list(all_bipartite(3, 2))
    for G in graphs:
        expected = oracles.partition_exists(G.size_a, G.size_b, G.edges)
        try:
            P = matching_partition(G)
        except PartitionError:
            assert not expected
        else:
            assert expected and P.violations(G) == []


def test_partition_failures_are_oracle_confirmed():
    """On |A| = 3, |B| = 4 the code fails exactly where the oracle finds no certificate."""
    rng = random.Random(5)
    graphs = [G for G in all_bipartite(3, 4) if G.size_a == 3 and G.size_b == 4]
    for G in rng.sample(graphs, 400) + [NO_CERTIFICATE]:
        expected = oracles.partition_exists(3, 4, G.edges)
        try:
            matching_partition(G)
            ok = True
        except PartitionError:
            ok = False
        assert ok == expected


def test_partition_is_deterministic():
    rng = random.Random(6)
    for _ in range(30):
        G = random_bipartite(rng, 8, 8)
        try:
            a = matching_partition(G)
        except PartitionError:
            continue
        assert matching_partition(G) == a


@settings(max_examples=150, deadline=None)
@given(bipartite)
def test_weak_partition_always_exists(G):
    P = matching_partition(G, require_private=False)
    assert set(P.violations(G)) <= {"a1_private_neighbor"}
    za, _ = alternating_reach(G, P.M)
    assert P.A1 == za


def test_partition_suite_tally():
    out = partition_suite([NO_CERTIFICATE, BipartiteGraph(1, 2, ((0, 1),))], keep=1)
    assert out["graphs"] == 2 and out["valid"] == 1
    assert out["proved_impossible"] == 1 and out["other_errors"] == 0
    assert len(out["failures"]) == 1


def test_incidence_bipartite():
    G = incidence_bipartite(make_uniform(3, [(0, 1, 2)]), 2)
    assert (G.size_a, G.size_b) == (1, 3) and G.adjacency == ((0, 1, 2),)
    G = incidence_bipartite(complete_uniform(4, 3), 2)
    assert (G.size_a, G.size_b) == (4, 6)
    assert all(len(row) == 3 for row in G.adjacency)
    H = complete_uniform(5, 3)
    G = incidence_bipartite(H, 3)
    assert G.adjacency == tuple((i,) for i in range(H.m))
    with pytest.raises(HypergraphError):
        incidence_bipartite(H, 4)


def test_g_value():
    red_only = RedBlueHypergraph.from_parts(4, 2, [(0, 1), (1, 2), (2, 3)], [])
    assert g_value(red_only, 3) == 3
    mixed = RedBlueHypergraph.from_parts(
        6, 2, [(4, 5), (0, 4)], [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert g_value(mixed, 3) == 6


def test_redblue_empty_and_single():
    out, rep = redblue_reduction(make_uniform(4, [], 3), 2, 3)
    assert out.base.m == 0 and rep.g == 0
    out, rep = redblue_reduction(make_uniform(3, [(0, 1, 2)]), 2, 3)
    assert out.red.m == 1 and out.blue.m == 0 and rep.g == 1


def test_redblue_on_extremal_witness():
    for W in ex_berge(5, 3, K3, collect_all=True).witnesses:
        out, rep = redblue_reduction(W, 2, 3, pattern=K3)
        assert rep.g >= W.m and rep.g_dominates
        assert rep.output_pattern_free
        assert rep.a2_shadows_blue
        assert not contains_copy(out.base, K3)


def test_redblue_random_g_dominates():
    rng = random.Random(8)
    from itertools import combinations
    for _ in range(60):
        n = rng.randint(3, 7)
        triples = [e for e in combinations(range(n), 3) if rng.random() < 0.4]
        H0 = make_uniform(n, triples, 3)
        out, rep = redblue_reduction(H0, 2, 3)
        assert rep.g_dominates and rep.a2_shadows_blue
        assert rep.b1 == rep.a1


def test_redblue_complete_triple_system():
    # four triples, six shadow pairs: only the four matched pairs survive, all red
    out, rep = redblue_reduction(complete_uniform(4, 3), 2, 3, pattern=K4)
    assert out.red.m == 4 and out.blue.m == 0 and rep.g == 4
    assert rep.output_pattern_free
    # the red part is reported, not required, to be clique-free
    assert rep.red_clique_free is False
