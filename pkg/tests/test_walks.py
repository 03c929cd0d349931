import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperspec import make_hypergraph, transition_kernel
from hyperspec.errors import IsolatedVertex, NotErgodic
from hyperspec.families import bowtie, complete_uniform, cube_hypergraph
from hyperspec.walks import (
    analyze,
    convergence_certificate,
    convergence_curve,
    equilibrium_apply,
    mu_norm,
    simulate,
    stationary_distribution,
    visit_frequencies,
)

from conftest import hypergraphs


def test_simulate_k33():
    g = complete_uniform(3, 3)
    freq = visit_frequencies(g, simulate(g, 0, 100_000, seed=1))
    assert np.allclose(freq, 1 / 3, atol=0.01)


def test_simulate_bowtie():
    g = bowtie()
    freq = visit_frequencies(g, simulate(g, 0, 100_000, seed=2))
    assert freq[2] == pytest.approx(2 / 6, abs=0.01)


def test_zero_steps():
    assert simulate(bowtie(), 3, 0, seed=0).tolist() == [3]


def test_seeded_walks_repeat():
    a = simulate(bowtie(), 0, 500, seed=7)
    b = simulate(bowtie(), 0, 500, seed=7)
    assert np.array_equal(a, b)


def test_path_follows_edges():
    g = bowtie()
    P = transition_kernel(g)
    path = simulate(g, 0, 2000, seed=3)
    assert all(P[a, b] > 0 for a, b in zip(path[:-1], path[1:]))


def test_isolated():
    with pytest.raises(IsolatedVertex):
        simulate(make_hypergraph(4, [(0, 1, 2)]), 0, 5, seed=0)


def test_rho_closed_forms():
    assert analyze(complete_uniform(3, 3)).rho == pytest.approx(0.5)
    assert analyze(complete_uniform(4, 3)).rho == pytest.approx(1 / 3)


def test_stationary_is_invariant():
    g = bowtie()
    pi = stationary_distribution(g)
    assert np.allclose(pi @ transition_kernel(g), pi, atol=1e-15)


def test_constant_function():
    for t in (1, 5, 20):
        rec = convergence_certificate(bowtie(), np.full(5, 2.5), t)
        assert rec.lhs == pytest.approx(0.0, abs=1e-12)


def test_k33_indicator():
    g = complete_uniform(3, 3)
    f = np.array([1.0, 0.0, 0.0])
    rec = convergence_certificate(g, f, 5)
    assert rec.lhs <= 0.5**5 * mu_norm(g, f) + 1e-12


def test_k34_geometric_ratio():
    g = complete_uniform(4, 3)
    f = np.array([1.0, -2.0, 0.5, 3.0])
    curve = convergence_curve(g, f, 20)
    ratios = [b.lhs / a.lhs for a, b in zip(curve[:-1], curve[1:]) if a.lhs > 1e-12]
    assert np.allclose(ratios, 1 / 3, atol=1e-6)


def test_not_ergodic():
    with pytest.raises(NotErgodic):
        convergence_certificate(make_hypergraph(6, [(0, 1, 2), (3, 4, 5)]), np.ones(6), 1)
    with pytest.raises(NotErgodic):
        convergence_certificate(cube_hypergraph(2, 2), np.ones(4), 1)


def test_equilibrium():
    g = bowtie()
    assert np.allclose(equilibrium_apply(g, [1, 0, 0, 0, 0]), 1 / 6)
    assert np.allclose(equilibrium_apply(g, np.full(5, 4.0)), 4.0)
    for j in range(5):
        e = np.zeros(5)
        e[j] = 1.0
        assert equilibrium_apply(g, e)[0] == pytest.approx(g.degrees[j] / g.degrees.sum())


@settings(max_examples=40, deadline=None)
@given(hypergraphs(min_n=3, max_n=8, uniform=3, connected=True), st.integers(0, 2**32 - 1))
def test_certificate_holds(g, seed):
    f = np.random.default_rng(seed).normal(size=g.n)
    assert all(r.holds for r in convergence_curve(g, f, 30))


@settings(max_examples=30, deadline=None)
@given(hypergraphs(min_n=3, max_n=8, uniform=3, connected=True), st.integers(1, 15))
def test_curve_matches_single_certificates(g, t):
    f = np.arange(g.n, dtype=float)
    one = convergence_certificate(g, f, t)
    curve = convergence_curve(g, f, t)[-1]
    assert one.lhs == pytest.approx(curve.lhs, abs=1e-12)
    assert one.rhs == pytest.approx(curve.rhs, abs=1e-12)
