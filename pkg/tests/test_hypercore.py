import random
from itertools import combinations, permutations

import pytest
from hypothesis import assume, given, settings, strategies as st

from bergekit import oracles
from bergekit.canon import canonical_form, canonical_key, is_canonical, is_isomorphic
from bergekit.hypercore import (HypergraphError, RedBlueHypergraph,
                                chromatic_number, clique_replacement, complete_uniform,
                                count_cliques, count_sub_copies, expansion, make_hypergraph,
                                make_uniform, shadow, star_construction, turan_hypergraph)

from conftest import K3, K4, P3, hypergraphs, random_uniform, uniform_graphs


def test_make_hypergraph_normalizes():
    H = make_hypergraph(3, [[2, 0, 1]])
    assert H.n == 3 and H.edges == ((0, 1, 2),)
    H = make_hypergraph(4, [[3, 1], [0, 2], [0, 1]])
    assert H.edges == ((0, 1), (0, 2), (1, 3))


@pytest.mark.parametrize("n,edges,msg", [
    (3, [[0, 1], [1, 0]], "duplicate"),
    (2, [[0, 2]], "out of range"),
    (3, [[]], "empty"),
])
def test_make_hypergraph_rejects(n, edges, msg):
    with pytest.raises(HypergraphError, match=msg):
        make_hypergraph(n, edges)


def test_uniformity_enforced():
    with pytest.raises(HypergraphError):
        make_uniform(4, [(0, 1), (1, 2, 3)])
    with pytest.raises(HypergraphError):
        RedBlueHypergraph(K3, ("red",))


def test_shadow_examples():
    assert shadow(make_hypergraph(3, [[0, 1, 2]]), 2).edges == ((0, 1), (0, 2), (1, 2))
    assert shadow(make_hypergraph(2, [[0, 1]]), 3).m == 0
    assert shadow(make_hypergraph(4, [[0, 1, 2], [1, 2, 3]]), 2).m == 5


@given(hypergraphs(max_n=7, max_m=5), st.integers(1, 4), st.integers(1, 4))
def test_shadow_composition(H, a, b):
    if b > a:
        a, b = b, a
    # edges smaller than a vanish from the a-shadow but not from the b-shadow
    assume(all(len(e) >= a for e in H.edges))
    assert shadow(shadow(H, a), b) == shadow(H, b)


@given(st.integers(1, 8), st.integers(1, 8))
def test_shadow_of_single_edge(size, r):
    H = make_hypergraph(size, [range(size)])
    expected = len(list(combinations(range(size), r))) if size >= r else 0
    assert shadow(H, r).m == expected


def test_complete_uniform():
    assert complete_uniform(4, 2).m == 6
    assert complete_uniform(5, 3).m == 10
    assert complete_uniform(3, 3).m == 1
    with pytest.raises(HypergraphError):
        complete_uniform(2, 3)


def test_turan_examples():
    assert turan_hypergraph(7, 3, 4).m == 20
    T = turan_hypergraph(4, 2, 2)
    assert T.edges == ((0, 2), (0, 3), (1, 2), (1, 3))
    assert turan_hypergraph(5, 3, 2).m == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_turan_counts_against_rainbow_oracle(n):
    for r in range(1, 5):
        for p in range(1, 6):
            sizes = [n // p + (1 if i < n % p else 0) for i in range(p)]
            # rainbow r-sets: choose r distinct parts, one vertex from each
            expected = sum(
                __import__("math").prod(sizes[i] for i in parts)
                for parts in combinations(range(p), r))
            assert turan_hypergraph(n, r, p).m == expected


def test_expansion_examples():
    assert expansion(K3, 3).edges == ((0, 1, 3), (0, 2, 4), (1, 2, 5))
    assert expansion(K3, 3).n == 6
    single = make_uniform(2, [(0, 1)])
    assert expansion(single, 4).edges == ((0, 1, 2, 3),)
    assert expansion(P3, 3).edges == ((0, 1, 3), (1, 2, 4))
    with pytest.raises(HypergraphError):
        expansion(expansion(K3, 3), 2)


def test_star_construction():
    assert star_construction(5, 3, 1).m == 6
    assert star_construction(5, 3, 0).m == 10
    assert star_construction(4, 3, 3).edges == ((0, 1, 2),)
    with pytest.raises(HypergraphError):
        star_construction(3, 2, 3)


def test_clique_replacement():
    assert clique_replacement(complete_uniform(5, 2), 3).m == 10
    assert clique_replacement(turan_hypergraph(6, 2, 2), 3).m == 0
    assert clique_replacement(complete_uniform(4, 3), 4).m == 1
    with pytest.raises(HypergraphError):
        clique_replacement(complete_uniform(4, 3), 2)


@pytest.mark.parametrize("s,k,r", [(s, k, r) for s in range(1, 7) for r in range(1, 5)
                                   for k in range(1, r + 1) if s >= r])
def test_clique_replacement_of_complete(s, k, r):
    assert clique_replacement(complete_uniform(s, k), r) == complete_uniform(s, r)


def test_count_sub_copies_examples():
    assert count_sub_copies(K3, K4) == 4
    H = random_uniform(random.Random(1), 6, 3, 0.5)
    assert count_sub_copies(make_uniform(3, [(0, 1, 2)]), H) == H.m
    assert count_sub_copies(complete_uniform(4, 3), complete_uniform(5, 3)) == 5


@settings(max_examples=40, deadline=None)
@given(uniform_graphs(2, max_n=5, max_m=7), st.randoms(use_true_random=False))
def test_count_sub_copies_matches_oracle_and_relabeling(H, rnd):
    for P in (K3, P3, make_uniform(4, [(0, 1), (2, 3)])):
        value = count_sub_copies(P, H)
        assert value == oracles.sub_copies(P, H)
        perm = list(range(H.n))
        rnd.shuffle(perm)
        assert count_sub_copies(P, H.relabel(perm)) == value


def test_count_cliques():
    assert count_cliques(complete_uniform(5, 3), 4) == 5
    H = random_uniform(random.Random(2), 6, 2, 0.6)
    assert count_cliques(H, 2) == H.m
    assert count_cliques(make_uniform(4, [], 2), 3) == 0
    assert count_cliques(H, 3) == count_sub_copies(K3, H)
    with pytest.raises(HypergraphError):
        count_cliques(H, 1)


@settings(max_examples=30, deadline=None)
@given(uniform_graphs(3, max_n=6, max_m=10), st.integers(3, 5))
def test_count_cliques_oracle(H, s):
    assert count_cliques(H, s) == oracles.cliques(H, s, 3)


def test_chromatic_number():
    assert chromatic_number(K4) == 4
    C5 = make_uniform(5, [(i, (i + 1) % 5) for i in range(5)])
    assert chromatic_number(C5) == 3
    assert chromatic_number(make_uniform(3, [], 2)) == 1
    assert chromatic_number(P3) == 2


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def test_canonical_triangle_relabeling():
    keys = {canonical_key(K3.relabel(p)) for p in permutations(range(3))}
    assert len(keys) == 1
    assert canonical_key(K3) != canonical_key(P3)


def test_canonical_certificate_permutation():
    rng = random.Random(3)
    for _ in range(50):
        H = random_uniform(rng, 6, 3, 0.4)
        cert = canonical_form(H)
        assert H.relabel(cert.perm).edges == cert.edges


def test_graph_classes_on_four_vertices():
    pairs = list(combinations(range(4), 2))
    keys = {canonical_key(make_uniform(4, [p for i, p in enumerate(pairs) if bits >> i & 1], 2))
            for bits in range(64)}
    assert len(keys) == 11


def test_canonical_matches_exhaustive_minimization():
    rng = random.Random(4)
    for _ in range(150):
        n = rng.randint(1, 6)
        H = random_uniform(rng, n, rng.randint(1, min(3, n)), rng.random())
        cert = canonical_form(H)
        assert (n, tuple(sorted(cert.hypergraph.masks))) == oracles.canonical(H)


def test_canonical_random_relabelings():
    rng = random.Random(5)
    for _ in range(1000):
        n = rng.randint(1, 9)
        r = rng.randint(1, min(4, n))
        H = random_uniform(rng, n, r, rng.random())
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_key(H) == canonical_key(H.relabel(perm))


@given(hypergraphs(max_n=6, max_m=6))
def test_canonical_nonuniform(H):
    perm = list(range(H.n))[::-1]
    assert is_isomorphic(H, H.relabel(perm))
    cert = canonical_form(H)
    assert is_canonical(H.n, cert.hypergraph.masks)
