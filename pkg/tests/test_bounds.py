import math
from itertools import product as cartesian

import pytest

from spectral_entropy import bounds as bd
from spectral_entropy.corpus import er_corpus, named_families
from spectral_entropy.entropy import EntropyParams, Family, entropy
from spectral_entropy.errors import (
    EmptyGraph,
    NotBipartite,
    NotConnected,
    NotRegular,
    ParameterAtLimit,
    TooLarge,
    TooManyEdges,
    TooSmall,
)
from spectral_entropy.graph import (
    MatrixKind,
    build_graph,
    complete,
    complete_bipartite,
    cycle,
    is_bipartite,
    is_connected,
    is_regular,
    path,
)
from spectral_entropy.spectra import graph_density, graph_spectrum

import oracles

L, Q = MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN
CORPUS = list(named_families(10).values()) + er_corpus(200)
GRID = list(cartesian((0.25, 0.5, 0.75), (0.25, 0.5, 0.75, 2.0)))


def measured(g, q, r, kind=L):
    return entropy(graph_density(g, kind), EntropyParams(Family.SHARMA_MITTAL, q, r))


def test_max_adjacent_degree_sum():
    assert bd.max_adjacent_degree_sum(cycle(4)) == 4
    assert bd.max_adjacent_degree_sum(complete_bipartite(1, 3)) == 4
    assert bd.max_adjacent_degree_sum(complete(4)) == 6
    with pytest.raises(EmptyGraph):
        bd.max_adjacent_degree_sum(complete(1))


def test_sm_upper_examples():
    c4 = cycle(4)
    assert bd.sm_upper_L(c4, 0.5, 0.5) == pytest.approx(2 * (2 * math.sqrt(2) - 1), abs=1e-12)
    assert bd.sm_upper_regular(c4, 0.5, 0.5) == pytest.approx(2 * (2 * math.sqrt(2) - 1), abs=1e-12)
    assert bd.sm_upper_L(complete(2), 0.5, 0.5) >= 0
    # n (2/n)**q = 4/3 fed through the r = q (Tsallis) line
    assert bd.sm_upper_regular(complete(3), 2, 2) == pytest.approx(-1 / 3, abs=1e-12)
    with pytest.raises(NotRegular):
        bd.sm_upper_regular(path(4), 0.5, 0.5)
    with pytest.raises(ParameterAtLimit):
        bd.sm_upper_L(c4, 1.0, 0.5)


def test_regular_identity_on_corpus():
    for g in CORPUS:
        if is_regular(g):
            for q, r in GRID + [(2.0, 3.0), (0.5, 1.0)]:
                assert bd.sm_upper_regular(g, q, r) == pytest.approx(bd.sm_upper_L(g, q, r), rel=1e-12, abs=1e-12)


def test_spanning_tree_examples():
    assert bd.spanning_tree_count(cycle(3)) == 3
    assert bd.spanning_tree_count(cycle(4)) == 4
    assert bd.spanning_tree_count(complete(4)) == 16
    assert bd.spanning_tree_count(complete(10)) == 10 ** 8
    assert bd.spanning_tree_count(build_graph(4, [(0, 1), (2, 3)])) == 0
    with pytest.raises(TooSmall):
        bd.spanning_tree_count(complete(1))


@pytest.mark.parametrize("g", [g for g in er_corpus(80) if g.n <= 7] + [complete(6), cycle(7)])
def test_spanning_trees_vs_brute_force(g):
    assert bd.spanning_tree_count(g) == oracles.spanning_trees_brute(g.n, g.edges)


def test_bipartite_lower_examples():
    c4 = cycle(4)
    assert bd.bipartite_moment_lower(c4, 2) == pytest.approx(24.0, abs=1e-12)
    assert bd.bipartite_lower_L(c4, 2, 2) == pytest.approx(0.625, abs=1e-12)
    with pytest.raises(NotBipartite):
        bd.bipartite_moment_lower(complete(3), 2)
    with pytest.raises(NotConnected):
        bd.bipartite_moment_lower(build_graph(4, [(0, 1), (2, 3)]), 2)
    with pytest.raises(TooSmall):
        bd.bipartite_moment_lower(complete(2), 2)


def test_q_edge_bound_examples():
    assert bd.q_max_edge_bound(cycle(4)) == pytest.approx(math.sqrt(28))
    assert bd.q_max_edge_bound(complete(2)) == 2.0
    v = bd.q_upper_edge_bound(cycle(4), 0.5, 0.5)
    assert v == pytest.approx(2 * (4 * math.sqrt(math.sqrt(28) / 8) - 1), abs=1e-12)
    assert v == pytest.approx(4.504, abs=5e-3)
    assert v >= measured(cycle(4), 0.5, 0.5, Q)


def test_clique_examples():
    assert bd.clique_number(complete(5)) == 5
    assert bd.clique_number(cycle(5)) == 2
    assert bd.clique_number(build_graph(3, [])) == 1
    with pytest.raises(TooLarge):
        bd.clique_number(path(65))


@pytest.mark.parametrize("g", [g for g in er_corpus(120) if g.n <= 12])
def test_clique_vs_brute_force(g):
    assert bd.clique_number(g) == oracles.clique_brute(g.n, g.edges)


def test_clique_bound_examples():
    assert bd.q_max_clique_bound(complete(3)) == pytest.approx(4.0)
    assert bd.q_max_clique_bound(cycle(4)) == pytest.approx(4.0)
    assert bd.q_max_clique_bound(cycle(5)) == pytest.approx(4.5)
    assert graph_spectrum(complete(3), Q).values[-1] == pytest.approx(4.0)


def test_mu1_examples():
    k2 = bd.spanning_subgraph_mu1_lower(complete(2))
    assert (k2.subgraph_sum, k2.value, k2.applicable) == (20, 10.0, False)
    k3 = bd.spanning_subgraph_mu1_lower(complete(3))
    assert k3.subgraph_sum == oracles.subgraph_sum_brute(3, complete(3).edges)
    assert k3.mu1 == pytest.approx(1.0)
    with pytest.raises(EmptyGraph):
        bd.spanning_subgraph_mu1_lower(complete(1))
    with pytest.raises(TooManyEdges):
        bd.spanning_subgraph_sum(complete(7))


@pytest.mark.parametrize("g", [g for g in er_corpus(60) if g.m <= 12])
def test_subgraph_sum_vs_brute_force(g):
    assert bd.spanning_subgraph_sum(g) == oracles.subgraph_sum_brute(g.n, g.edges)


def test_report_examples():
    rep = bd.bound_report(cycle(4), 0.5, 0.5, L)
    assert [e.name for e in rep.entries] == ["sm_upper_L", "sm_upper_regular", "bipartite_lower_L"]
    assert all(e.applicable and e.regime_valid for e in rep.entries)
    assert rep.measured == pytest.approx(math.sqrt(2), abs=1e-12)
    assert not rep.violations()
    k3 = bd.bound_report(complete(3), 0.5, 0.5, L)
    assert not k3.entry("bipartite_lower_L").applicable
    assert "NotBipartite" in k3.entry("bipartite_lower_L").reason
    k2 = bd.bound_report(complete(2), 0.5, 0.5, Q)
    mu = k2.entry("spanning_subgraph_lower_Q")
    assert not mu.applicable and "violated" in mu.reason
    hi = bd.bound_report(cycle(4), 2, 2, L)
    assert not any(e.regime_valid for e in hi.entries)


def test_upper_bounds_hold_on_corpus():
    for g in CORPUS:
        for q, r in GRID:
            h_l, h_q = measured(g, q, r, L), measured(g, q, r, Q)
            assert bd.sm_upper_L(g, q, r) >= h_l - 1e-9
            assert bd.q_upper_edge_bound(g, q, r) >= h_q - 1e-9
            assert bd.q_upper_clique_bound(g, q, r) >= h_q - 1e-9
            if g.n >= 3 and is_connected(g) and is_bipartite(g)[0]:
                assert bd.bipartite_lower_L(g, q, r) <= h_l + 1e-9


def test_spectral_level_bounds_on_corpus():
    for g in CORPUS:
        lam = graph_spectrum(g, L).values[-1]
        mu = graph_spectrum(g, Q).values[-1]
        assert lam <= bd.max_adjacent_degree_sum(g) + 1e-9
        assert mu <= bd.q_max_edge_bound(g) + 1e-9
        assert mu <= bd.q_max_clique_bound(g) + 1e-9


def test_report_violations_empty_on_corpus_sample():
    for g in CORPUS[::7]:
        for kind in MatrixKind:
            rep = bd.bound_report(g, 0.5, 0.5, kind)
            assert not rep.violations()
            assert all(s.holds for s in rep.spectral)
