import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from hyperspec import (
    best_K,
    cd_check,
    curvature_spectral_audit,
    d_star,
    gamma_forms,
    make_hypergraph,
    normalized_spectrum,
    ollivier_kappa,
    scalar_curvature,
    transition_kernel,
    wasserstein,
)
from hyperspec.curvature import crv2, min_ollivier
from hyperspec.errors import Disconnected, InvalidDimension, NotAdjacent, NotDistribution
from hyperspec.families import bowtie, complete_uniform, disjoint_union, uniform_chain

from conftest import hypergraphs


def lap_of(P, f):
    return P @ f - f


def gamma_fn(P, f, g):
    # 2 Gamma(f, g) = Lap(fg) - f Lap g - g Lap f
    return 0.5 * (lap_of(P, f * g) - f * lap_of(P, g) - g * lap_of(P, f))


def gamma2_fn(P, f):
    return 0.5 * (lap_of(P, gamma_fn(P, f, f)) - 2 * gamma_fn(P, f, lap_of(P, f)))


def full_forms_min_eig(g, m, K):
    """Smallest eigenvalue over vertices of the unrestricted form, via LAPACK."""
    worst = math.inf
    for i in range(g.n):
        qp = gamma_forms(g, i)
        M = qp.gamma2 - (0 if m == math.inf else 1 / m) * np.outer(qp.delta_row, qp.delta_row) - K * qp.gamma
        worst = min(worst, np.linalg.eigvalsh(M)[0])
    return worst


def lp_w1(g, mu, nu):
    n = g.n
    C = g.distance_matrix.astype(float)
    A_eq = np.zeros((2 * n, n * n))
    for i in range(n):
        A_eq[i, i * n:(i + 1) * n] = 1.0
        A_eq[n + i, i::n] = 1.0
    res = linprog(C.ravel(), A_eq=A_eq, b_eq=np.concatenate([mu, nu]), bounds=(0, None), method="highs")
    return res.fun


class TestGamma:
    def test_k33_indicator(self):
        f = np.array([1.0, 0.0, 0.0])
        qp = gamma_forms(complete_uniform(3, 3), 0)
        assert f @ qp.gamma @ f == pytest.approx(0.5)

    def test_constant(self):
        g = bowtie()
        c = np.full(5, 3.0)
        for i in range(5):
            qp = gamma_forms(g, i)
            assert c @ qp.gamma @ c == pytest.approx(0.0, abs=1e-12)
            assert c @ qp.gamma2 @ c == pytest.approx(0.0, abs=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(min_n=3, max_n=7, connected=True), st.integers(0, 2**32 - 1))
    def test_forms_match_function_definitions(self, g, seed):
        P = transition_kernel(g)
        f = np.random.default_rng(seed).normal(size=g.n)
        G, G2 = gamma_fn(P, f, f), gamma2_fn(P, f)
        for i in range(g.n):
            qp = gamma_forms(g, i)
            assert f @ qp.gamma @ f == pytest.approx(G[i], abs=1e-10)
            assert f @ qp.gamma2 @ f == pytest.approx(G2[i], abs=1e-10)
            assert qp.delta_row @ f == pytest.approx(lap_of(P, f)[i], abs=1e-12)

    @pytest.mark.parametrize("g", [complete_uniform(3, 3), bowtie(), uniform_chain(3), complete_uniform(5, 3)])
    def test_expanded_sum_agrees(self, g):
        rng = np.random.default_rng(0)
        for i in range(g.n):
            qp = gamma_forms(g, i)
            assert qp.display_discrepancy < 1e-12
            for _ in range(200 // g.n):
                f = rng.normal(size=g.n)
                assert f @ qp.gamma2 @ f == pytest.approx(f @ qp.gamma2_display @ f, abs=1e-10)


class TestCD:
    def test_d_star(self):
        assert d_star(complete_uniform(3, 3)) == pytest.approx(2.0)

    def test_examples(self):
        g = complete_uniform(3, 3)
        assert cd_check(g, 2, -0.5).holds
        bad = cd_check(g, 2, 10)
        assert not bad.holds and bad.min_eigenvalue < 0

    @settings(max_examples=30, deadline=None)
    @given(hypergraphs(min_n=3, max_n=8, connected=True))
    def test_d_star_condition(self, g):
        assert cd_check(g, 2, 1 / d_star(g) - 1).holds

    def test_invalid_dimension(self):
        for m in (1, 0.5, -2):
            with pytest.raises(InvalidDimension):
                cd_check(bowtie(), m, 0)
        with pytest.raises(InvalidDimension):
            best_K(bowtie(), 1)

    @pytest.mark.parametrize("g", [complete_uniform(3, 3), bowtie(), complete_uniform(5, 3), uniform_chain(3)])
    @pytest.mark.parametrize("m", [2, 3, math.inf])
    def test_best_K_against_lapack(self, g, m):
        K = best_K(g, m)
        assert full_forms_min_eig(g, m, K) >= -1e-9
        assert full_forms_min_eig(g, m, K + 1e-5) < 0

    def test_best_K_values(self):
        k33 = complete_uniform(3, 3)
        assert best_K(k33, 2) == pytest.approx(0.25, abs=1e-6)
        assert best_K(k33, math.inf) == pytest.approx(1.25, abs=1e-6)

    def test_best_K_monotone_in_m(self):
        g = bowtie()
        ks = [best_K(g, m) for m in (1.5, 2, 4, 10, math.inf)]
        assert all(a <= b + 1e-6 for a, b in zip(ks, ks[1:]))

    def test_disjoint_union_takes_minimum(self):
        a, b = complete_uniform(3, 3), bowtie()
        u = disjoint_union(a, b)
        assert best_K(u, 2) == pytest.approx(min(best_K(a, 2), best_K(b, 2)), abs=2e-6)

    def test_certificate_worst_vertex(self):
        cert = cd_check(bowtie(), 2, 5)
        assert 0 <= cert.worst_vertex < 5 and (cert.m, cert.K) == (2, 5)


class TestTransportDistance:
    def test_identical(self):
        p = transition_kernel(bowtie())[0]
        assert wasserstein(bowtie(), p, p).w1 == pytest.approx(0.0, abs=1e-15)

    def test_k33(self):
        P = transition_kernel(complete_uniform(3, 3))
        assert wasserstein(complete_uniform(3, 3), P[0], P[1]).w1 == pytest.approx(0.5)

    def test_bowtie(self):
        P = transition_kernel(bowtie())
        r = wasserstein(bowtie(), P[0], P[2])
        assert r.w1 == pytest.approx(0.75)
        assert np.allclose(r.plan.sum(axis=1), P[0]) and np.allclose(r.plan.sum(axis=0), P[2])

    @settings(max_examples=40, deadline=None)
    @given(hypergraphs(min_n=2, max_n=7, connected=True), st.integers(0, 2**32 - 1))
    def test_matches_linprog(self, g, seed):
        rng = np.random.default_rng(seed)
        mu = rng.random(g.n) * (rng.random(g.n) < 0.7)
        nu = rng.random(g.n) * (rng.random(g.n) < 0.7)
        mu[0] += 0.1
        nu[-1] += 0.1
        mu, nu = mu / mu.sum(), nu / nu.sum()
        assert wasserstein(g, mu, nu).w1 == pytest.approx(lp_w1(g, mu, nu), abs=1e-9)

    def test_errors(self):
        with pytest.raises(NotDistribution):
            wasserstein(bowtie(), [1, 0, 0, 0, 0], [0.5, 0, 0, 0, 0])
        with pytest.raises(NotDistribution):
            wasserstein(bowtie(), [1, 0, 0], [1, 0, 0])
        two = make_hypergraph(4, [(0, 1), (2, 3)])
        with pytest.raises(Disconnected):
            wasserstein(two, [1, 0, 0, 0], [0, 0, 0, 1])


class TestOllivier:
    def test_k33(self):
        g = complete_uniform(3, 3)
        for x, y in [(0, 1), (0, 2), (1, 2)]:
            assert ollivier_kappa(g, x, y).kappa == pytest.approx(0.5)

    def test_bowtie(self):
        r = ollivier_kappa(bowtie(), 0, 2)
        assert r.kappa == pytest.approx(0.25) and r.w1 == pytest.approx(0.75)
        assert min_ollivier(bowtie())[0] == pytest.approx(0.25)

    def test_not_adjacent(self):
        with pytest.raises(NotAdjacent):
            ollivier_kappa(bowtie(), 0, 3)

    def test_scalar(self):
        assert scalar_curvature(complete_uniform(3, 3), 0) == pytest.approx(1.0)

    @settings(max_examples=30, deadline=None)
    @given(hypergraphs(min_n=2, max_n=7, connected=True))
    def test_range(self, g):
        for x in range(g.n):
            for y in g.neighbors[x]:
                k = ollivier_kappa(g, x, y).kappa
                assert -2 - 1e-12 <= k <= 1 + 1e-12
                assert k == pytest.approx(ollivier_kappa(g, y, x).kappa, abs=1e-12)


class TestSpectralAudit:
    def test_k33_tight(self):
        crv3, crv2_report = curvature_spectral_audit(complete_uniform(3, 3))
        assert crv3.verdict == "holds"
        assert crv3.subject == pytest.approx(0.5)
        assert crv3.details["lambda_2"] == pytest.approx(1.5)
        assert crv3.details["right_margin"] == pytest.approx(0.0, abs=1e-12)
        assert crv2_report.verdict == "holds"

    def test_bowtie(self):
        crv3 = curvature_spectral_audit(bowtie())[0]
        assert crv3.verdict == "holds"
        assert crv3.details["left_margin"] >= 0 and crv3.details["right_margin"] >= 0

    def test_disconnected(self):
        reports = curvature_spectral_audit(make_hypergraph(6, [(0, 1, 2), (3, 4, 5)]))
        assert all(r.verdict == "not-applicable" for r in reports)

    def test_crv2_bound(self):
        g = complete_uniform(5, 3)
        K = best_K(g, 3)
        r = crv2(g, 3, K)
        assert r.bound == pytest.approx(1.5 * K)
        assert r.subject == pytest.approx(normalized_spectrum(g).eigenvalues[1])
        assert r.verdict == "holds"
        assert crv2(g, 2, -0.1).verdict == "not-applicable"
