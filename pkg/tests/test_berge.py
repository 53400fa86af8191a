import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from bergekit import oracles
from bergekit.berge import (BergeEmbedding, BergeError, blue_edges, enumerate_berge_copies,
                            find_berge, greedy_berge_from_copy, has_berge, has_berge_through,
                            is_berge_free, shadow_multiplicity, verify_observation)
from bergekit.canon import canonical_key
from bergekit.hypercore import (Hypergraph, complete_uniform,
                                make_hypergraph, make_uniform, to_mask, turan_hypergraph)

from conftest import K3, K4, P3, P4, hypergraphs

TRIPLE_TRIANGLE = make_hypergraph(6, [[0, 1, 3], [1, 2, 4], [0, 2, 5]])


def test_find_berge_triangle():
    emb = find_berge(TRIPLE_TRIANGLE, K3)
    assert emb is not None
    assert emb.vertex_map == (0, 1, 2)
    emb.validate()


def test_find_berge_too_few_edges():
    assert find_berge(make_hypergraph(5, [[0, 1, 2, 3, 4]]), K3) is None


@pytest.mark.parametrize("n", range(4, 10))
def test_turan_is_berge_k4_free(n):
    assert find_berge(turan_hypergraph(n, 3, 3), K4) is None


def test_validate_rejects_bad_embeddings():
    H = TRIPLE_TRIANGLE
    with pytest.raises(BergeError, match="edge map"):
        BergeEmbedding(K3, H, (0, 1, 2), (0, 0, 1)).validate()
    with pytest.raises(BergeError, match="vertex map"):
        BergeEmbedding(K3, H, (0, 0, 2), (0, 1, 2)).validate()
    with pytest.raises(BergeError, match="not inside"):
        BergeEmbedding(K3, H, (0, 1, 2), (1, 0, 2)).validate()


def test_is_berge_free():
    assert is_berge_free(Hypergraph(5, ()), [K3, P4]) == (True, None)
    free, (which, emb) = is_berge_free(TRIPLE_TRIANGLE, [K3, P4])
    assert not free and which == 0
    emb.validate()
    free, (which, _) = is_berge_free(K4.base, [P4, K3])
    assert not free and which == 0


def test_shadow_multiplicity():
    H = make_hypergraph(4, [[0, 1, 2], [0, 1, 3]])
    assert shadow_multiplicity(H, (0, 1)) == 2
    assert shadow_multiplicity(H, (2, 3)) == 0
    assert shadow_multiplicity(complete_uniform(5, 3).base, (1, 4)) == 3


def test_blue_edges():
    assert len(blue_edges(make_hypergraph(5, [range(5)]), K3)) == 10
    H = make_hypergraph(5, [[0, 1, 2], [0, 1, 3], [0, 1, 4]])
    blue = blue_edges(H, K3)
    assert (0, 1) not in blue
    assert len(blue) == 6
    single = make_uniform(2, [(0, 1)])
    assert blue_edges(H, single) == set()


def test_greedy_examples():
    H = make_hypergraph(4, [[0, 1, 2, 3]])
    emb = greedy_berge_from_copy(H, make_uniform(2, [(0, 1)]), (2, 3))
    assert emb.edge_map == (0,)
    K53 = complete_uniform(5, 3).base
    emb = greedy_berge_from_copy(K53, K3, (0, 1, 2))
    assert len(set(emb.edge_map)) == 3
    with pytest.raises(BergeError, match="needs at least 3"):
        greedy_berge_from_copy(make_hypergraph(4, [[0, 1, 2], [0, 1, 3]]), K3, (0, 1, 2))


def test_greedy_random_trials():
    """Every shadow copy whose edges have multiplicity >= |E(F)| extends."""
    rng = random.Random(11)
    done = 0
    trials = 0
    while trials < 10_000:
        n = rng.randint(4, 7)
        H = Hypergraph(n, tuple(sorted({tuple(sorted(rng.sample(range(n), rng.randint(3, n))))
                                         for _ in range(rng.randint(3, 8))})))
        for F in (K3, P3, make_uniform(4, [(0, 1), (2, 3)])):
            for _ in range(5):
                trials += 1
                vmap = tuple(rng.sample(range(n), F.n))
                mult = [shadow_multiplicity(H, [vmap[v] for v in e]) for e in F.edges]
                if min(mult) >= F.m:
                    greedy_berge_from_copy(H, F, vmap).validate()
                    done += 1
    assert done > 500


def _random_host(rng, n):
    edges = set()
    for _ in range(rng.randint(0, 5)):
        edges.add(tuple(sorted(rng.sample(range(n), rng.randint(1, n)))))
    return Hypergraph(n, tuple(edges))


def test_find_berge_matches_oracle():
    rng = random.Random(12)
    patterns = [K3, P3, P4, make_uniform(3, [(0, 1, 2)]), make_uniform(4, [(0, 1, 2), (1, 2, 3)]),
                make_uniform(4, [(0, 1), (2, 3)])]
    for _ in range(400):
        H = _random_host(rng, rng.randint(2, 6))
        for F in patterns:
            expected = oracles.berge(H, F)
            emb = find_berge(H, F)
            assert (emb is not None) == expected
            assert has_berge(H, F) == expected
            if emb:
                emb.validate()


def test_find_berge_is_lex_least():
    from itertools import permutations
    rng = random.Random(13)
    for _ in range(60):
        H = _random_host(rng, 5)
        emb = find_berge(H, P3)
        first = next((phi for phi in permutations(range(5), 3) if _maps_to(H, P3, phi)), None)
        assert (emb.vertex_map if emb else None) == first


def _maps_to(H, F, phi):
    """Berge copy with the given vertex map, by brute force over edge maps."""
    from itertools import permutations
    sets = [frozenset(e) for e in H.edges]
    imgs = [frozenset(phi[v] for v in f) for f in F.edges]
    return any(all(imgs[j] <= sets[i] for j, i in enumerate(a))
               for a in permutations(range(len(sets)), len(imgs)))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=6, max_m=5, min_size=2), st.data())
def test_monotone_under_deletion_and_enlargement(H, data):
    for F in (K3, P3):
        has = has_berge(H, F)
        if H.m:
            i = data.draw(st.integers(0, H.m - 1))
            smaller = Hypergraph(H.n, H.edges[:i] + H.edges[i + 1:])
            if not has:
                assert not has_berge(smaller, F)
            v = data.draw(st.integers(0, H.n - 1))
            grown = set(H.edges[i]) | {v}
            bigger = set(H.edges) - {H.edges[i]}
            if tuple(sorted(grown)) not in bigger:
                bigger.add(tuple(sorted(grown)))
                if has:
                    assert has_berge(Hypergraph(H.n, tuple(bigger)), F)


def test_has_berge_through():
    masks = [to_mask(e) for e in TRIPLE_TRIANGLE.edges]
    assert has_berge_through(K3, 6, masks, masks[2])
    assert not has_berge_through(K3, 6, masks[:2], masks[1])


# ---------------------------------------------------------------------------
# enumeration of Berge copies
# ---------------------------------------------------------------------------

def _oracle_copies(F, k):
    out = set()
    extra = F.m * (k - F.r)
    for N in range(F.n, F.n + extra + 1):
        ksets = list(combinations(range(N), k))
        for chosen in combinations(ksets, F.m):
            if set().union(*chosen) != set(range(N)):
                continue
            G = Hypergraph(N, chosen)
            if oracles.berge(G, F):
                out.add(canonical_key(G))
    return out


@pytest.mark.parametrize("F,k", [(P3, 3), (P3, 4), (K3, 3)])
def test_enumerate_berge_copies_oracle(F, k):
    assert set(enumerate_berge_copies(F, k)) == _oracle_copies(F, k)


def test_enumerate_single_edge():
    e = make_uniform(2, [(0, 1)])
    assert len(enumerate_berge_copies(e, 3)) == 1
    assert list(enumerate_berge_copies(e, 2).values()) == [e]
    with pytest.raises(BergeError):
        enumerate_berge_copies(K3, 1)


@pytest.mark.parametrize("F,expected", [
    (make_uniform(2, [(0, 1)]), (1, 1, 1)),
    (P3, (3, 2, 3)),
    (K3, (13, 4, 13)),
])
def test_observation(F, expected):
    rep = verify_observation(F, 3, 4)
    assert (rep["direct"], rep["intermediate"], rep["composed"]) == expected
    assert rep["equal"]
