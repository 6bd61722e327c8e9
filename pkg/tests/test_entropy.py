import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_entropy.corpus import L_COSPECTRAL_PAIR, Q_COSPECTRAL_PAIR, er_corpus, named_families
from spectral_entropy.entropy import (
    EntropyParams,
    Family,
    all_entropies,
    entropy,
    renyi,
    sharma_mittal,
    tsallis,
    von_neumann,
)
from spectral_entropy.errors import InvalidParameter, NonPositiveQ, ParameterAtLimit
from spectral_entropy.graph import MatrixKind, complete, cycle
from spectral_entropy.spectra import DensitySpectrum, graph_density

import oracles

LN2 = math.log(2.0)
K2, K3, C4 = graph_density(complete(2)), graph_density(complete(3)), graph_density(cycle(4))


def ds_of(probs):
    return DensitySpectrum(np.asarray(probs, dtype=float))


def sm(ds, q, r):
    return entropy(ds, EntropyParams(Family.SHARMA_MITTAL, q, r))


def test_sharma_mittal_examples():
    assert sharma_mittal(K3, 2, 2.5) == pytest.approx(oracles.sm(K3.probs, 2, 2.5), abs=1e-14)
    assert sm(K3, 2, 2) == pytest.approx(0.5, abs=1e-14)
    # K_n closed form (1/(1-r))((n-1)**(1-r) - 1) at n=3
    assert sharma_mittal(K3, 3, 2) == pytest.approx((2.0 ** (1 - 2) - 1) / (1 - 2), abs=1e-14)
    assert sm(C4, 0.5, 0.5) == pytest.approx(2 * (1 / math.sqrt(2)), abs=1e-14)
    assert sharma_mittal(C4, 0.5, 2) == pytest.approx(0.6568542494923801, abs=1e-14)
    assert sharma_mittal(C4, 2, 0.5) == pytest.approx(1.2659863237109041, abs=1e-14)


def test_renyi_tsallis_vn_examples():
    assert renyi(graph_density(complete(5)), 2) == pytest.approx(2.0, abs=1e-12)
    assert renyi(C4, 2) == pytest.approx(math.log2(8 / 3), abs=1e-14)
    assert renyi(K2, 3) == pytest.approx(0.0, abs=1e-14)
    assert tsallis(K3, 2) == pytest.approx(0.5, abs=1e-14)
    assert tsallis(K2, 2) == pytest.approx(0.0, abs=1e-14)
    assert tsallis(C4, 2) == pytest.approx(0.625, abs=1e-14)
    assert tsallis(C4, 3) == pytest.approx(0.421875, abs=1e-14)
    assert von_neumann(K2) == pytest.approx(0.0, abs=1e-14)
    assert von_neumann(C4) == pytest.approx(1.5, abs=1e-14)
    assert von_neumann(K3) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("n", [3, 4, 5, 9, 17])
def test_complete_graph_values(n):
    ds = graph_density(complete(n))
    assert von_neumann(ds) == pytest.approx(math.log2(n - 1), abs=1e-12)
    for q in (0.5, 2, 3):
        assert renyi(ds, q) == pytest.approx(math.log2(n - 1), abs=1e-10)


def test_routing_examples():
    assert sm(C4, 2, 1 + 1e-12) == pytest.approx(math.log2(8 / 3), abs=1e-14)
    assert sm(C4, 2, 2) == pytest.approx(0.625, abs=1e-14)
    assert sm(C4, 1 + 1e-12, 1 + 1e-12) == pytest.approx(1.5, abs=1e-14)
    assert entropy(C4, EntropyParams(Family.VON_NEUMANN)) == pytest.approx(1.5)
    assert entropy(C4, EntropyParams(Family.RENYI, 2)) == renyi(C4, 2)
    assert entropy(C4, EntropyParams(Family.TSALLIS, 2)) == tsallis(C4, 2)


def test_q_limit_route():
    # q -> 1 at fixed r: expm1((1-r) H_nats) / (1-r), the limit of the raw formula
    got = sm(C4, 1.0, 2.0)
    assert got == pytest.approx(-math.expm1(-1.5 * LN2), abs=1e-14)
    assert abs(sharma_mittal(C4, 1 + 1e-5, 2.0) - got) < 1e-4


def test_errors():
    with pytest.raises(ParameterAtLimit):
        sharma_mittal(C4, 2, 1.0)
    with pytest.raises(ParameterAtLimit):
        sharma_mittal(C4, 1.0, 2)
    with pytest.raises(ParameterAtLimit):
        renyi(C4, 1.0)
    with pytest.raises(ParameterAtLimit):
        tsallis(C4, 1.0 + 1e-10)
    for fn in (lambda: renyi(C4, 0), lambda: tsallis(C4, -1), lambda: sm(C4, 0, 2)):
        with pytest.raises(NonPositiveQ):
            fn()
    with pytest.raises(InvalidParameter):
        EntropyParams(limit_tol=0.0)
    with pytest.raises(InvalidParameter):
        Family.parse("boltzmann")
    assert Family.parse("Sharma-Mittal") is Family.SHARMA_MITTAL
    assert Family.parse("vn") is Family.VON_NEUMANN


def test_sm_r_to_1_is_renyi_in_nats():
    # the raw formula tends to the natural-log Renyi entropy
    for ds in (C4, K3, graph_density(cycle(7))):
        for q in (0.5, 2.0):
            target = renyi(ds, q) * LN2
            gaps = [abs(sharma_mittal(ds, q, 1 + s * e) - target) for e in (1e-4, 1e-6) for s in (1, -1)]
            assert max(gaps) < 1e-3
            assert max(gaps[2:]) < max(gaps[:2])


def test_sm_r_to_q_is_tsallis():
    for q in (0.5, 2.0):
        gaps = [abs(sharma_mittal(C4, q, q + s * e) - tsallis(C4, q)) for e in (1e-4, 1e-6) for s in (1, -1)]
        assert max(gaps) < 1e-3
        assert max(gaps[2:]) < max(gaps[:2])


def test_sm_diagonal_to_vn_in_nats():
    gaps = [abs(sharma_mittal(C4, 1 + e, 1 + e) - 1.5 * LN2) for e in (1e-4, -1e-4, 1e-6, -1e-6)]
    assert max(gaps) < 1e-3
    assert max(gaps[2:]) < max(gaps[:2])


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.floats(0.1, 4).filter(lambda x: abs(x - 1) > 1e-6), st.floats(0.1, 4))
def test_pure_state_zero(n, q, r):
    ds = ds_of([0.0] * (n - 1) + [1.0])
    for fam in Family:
        assert entropy(ds, EntropyParams(fam, q, r)) == 0.0


@settings(max_examples=80, deadline=None)
@given(st.lists(st.floats(0.0, 1.0), min_size=2, max_size=10).filter(lambda xs: sum(xs) > 1e-3),
       st.floats(0.2, 3.5).filter(lambda x: abs(x - 1) > 1e-3),
       st.floats(0.2, 3.5).filter(lambda x: abs(x - 1) > 1e-3))
def test_matches_oracle_formulas(xs, q, r):
    p = np.array(xs) / sum(xs)
    ds = ds_of(p)
    if abs(q - r) > 1e-3:
        assert sharma_mittal(ds, q, r) == pytest.approx(oracles.sm(p, q, r), rel=1e-9, abs=1e-12)
    assert renyi(ds, q) == pytest.approx(oracles.renyi_bits(p, q), rel=1e-9, abs=1e-12)
    assert tsallis(ds, q) == pytest.approx(oracles.tsallis(p, q), rel=1e-9, abs=1e-12)
    assert von_neumann(ds) == pytest.approx(oracles.vn_bits(p), rel=1e-9, abs=1e-12)


@pytest.mark.parametrize("pair, kind", [(L_COSPECTRAL_PAIR, MatrixKind.LAPLACIAN),
                                        (Q_COSPECTRAL_PAIR, MatrixKind.SIGNLESS_LAPLACIAN)])
def test_cospectral_invariance(pair, kind):
    d1, d2 = (graph_density(g, kind) for g in pair)
    for q in (0.5, 2.0, 3.0):
        for r in (0.5, 2.0, 3.0):
            e1, e2 = all_entropies(d1, q, r), all_entropies(d2, q, r)
            for key in e1:
                assert abs(e1[key] - e2[key]) <= 1e-12


def test_max_entropy_bound():
    for g in list(named_families(8).values()) + er_corpus(60):
        for kind in MatrixKind:
            assert von_neumann(graph_density(g, kind)) <= math.log2(g.n) + 1e-12


def test_all_entropies_at_q1_degrades_to_vn():
    e = all_entropies(C4, 1.0, 1.0)
    assert all(v == pytest.approx(1.5) for v in e.values())
