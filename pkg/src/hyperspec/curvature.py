"""Ricci curvature of the random-walk Laplace operator, in two senses.

Bakry-Emery: the carre du champ ``Gamma`` and its iterate ``Gamma_2`` are
quadratic forms in ``f`` at every vertex, so ``CD(m, K)`` reduces to a
positive-semidefiniteness test per vertex. Ollivier: ``kappa(x, y)`` compares
the one-step distributions of neighbouring vertices in transport distance.

The Laplace operator here is ``P - I`` (negative semidefinite), the opposite
sign of the normalized Laplacian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import Disconnected, InvalidDimension, NoConvergence, NotAdjacent, NotDistribution
from .hypergraph import Hypergraph
from .operators import adjacency, transition_kernel
from .spectra import normalized_spectrum, sym_eigen
from .transport import transport
from .verdict import BoundReport, evaluated, not_applicable

PSD_TOL = 1e-9
K_RESOLUTION = 1e-6
CERT_TOL = 1e-9


@dataclass(frozen=True)
class QuadraticFormPair:
    vertex: int
    gamma: np.ndarray
    gamma2: np.ndarray
    gamma2_display: np.ndarray
    delta_row: np.ndarray

    @property
    def display_discrepancy(self) -> float:
        """Largest entrywise gap between the two constructions of ``Gamma_2``."""
        return float(np.max(np.abs(self.gamma2 - self.gamma2_display)))


@dataclass(frozen=True)
class CDCertificate:
    holds: bool
    worst_vertex: int
    min_eigenvalue: float
    m: float
    K: float


@dataclass(frozen=True)
class TransportResult:
    w1: float
    plan: np.ndarray
    dual_gap: float


@dataclass(frozen=True)
class OllivierResult:
    pair: tuple[int, int]
    kappa: float
    transport_plan: np.ndarray
    w1: float


def _outer_diff(n: int, a: int, b: int) -> np.ndarray:
    v = np.zeros(n)
    v[a] += 1.0
    v[b] -= 1.0
    return np.outer(v, v)


@lru_cache(maxsize=32)
def _gammas(g: Hypergraph) -> tuple[np.ndarray, ...]:
    P = transition_kernel(g)
    out = []
    for i in range(g.n):
        G = np.zeros((g.n, g.n))
        for j in np.flatnonzero(P[i]):
            G += 0.5 * P[i, j] * _outer_diff(g.n, i, j)
        out.append(G)
    return tuple(out)


def gamma_forms(g: Hypergraph, i: int) -> QuadraticFormPair:
    """``Gamma(f,f)(i) = f' G f`` and ``Gamma_2(f,f)(i) = f' G2 f`` at vertex ``i``.

    ``G2`` comes from the definition
    ``Gamma_2 = 1/2 (Lap Gamma(f,f) - 2 Gamma(f, Lap f))``; the expanded
    three-term sum over two-step paths is built separately for cross-checking.
    """
    P = transition_kernel(g)
    n = g.n
    lap = P - np.eye(n)
    gammas = _gammas(g)
    G = gammas[i]
    q = lap[i].copy()

    composed = 0.5 * sum(lap[i, j] * gammas[j] for j in range(n) if lap[i, j] != 0.0)
    GL = G @ lap
    composed = composed - 0.5 * (GL + GL.T)

    display = np.zeros((n, n))
    for j in np.flatnonzero(P[i]):
        for k in np.flatnonzero(P[j]):
            v = np.zeros(n)
            v[i] += 1.0
            v[j] -= 2.0
            v[k] += 1.0
            display += 0.25 * P[i, j] * P[j, k] * np.outer(v, v)
        display -= 0.5 * P[i, j] * _outer_diff(n, i, j)
    display += 0.5 * np.outer(q, q)
    return QuadraticFormPair(i, G, 0.5 * (composed + composed.T), display, q)


@lru_cache(maxsize=32)
def _local_forms(g: Hypergraph):
    """Per-vertex ``(support, G, G2, q)`` restricted to the 2-ball, where the forms live."""
    D = g.distance_matrix
    out = []
    for i in range(g.n):
        qp = gamma_forms(g, i)
        ball = np.flatnonzero((D[i] >= 0) & (D[i] <= 2))
        ix = np.ix_(ball, ball)
        out.append((ball, qp.gamma[ix], qp.gamma2[ix], qp.delta_row[ball]))
    return tuple(out)


def d_star(g: Hypergraph) -> float:
    """``max_i max_{j ~ i} d_i / A_ij``."""
    A = adjacency(g)
    d = g.degrees.astype(float)
    best = 0.0
    for i in range(g.n):
        for j in g.neighbors[i]:
            best = max(best, d[i] / A[i, j])
    return best


def _check_dimension(m: float) -> None:
    if not (m == math.inf or m > 1):
        raise InvalidDimension(f"CD(m, K) needs m > 1 or m = inf, got {m}")


def cd_check(g: Hypergraph, m: float, K: float) -> CDCertificate:
    """Test ``Gamma_2 >= (Lap f)^2 / m + K Gamma`` at every vertex as a PSD condition."""
    _check_dimension(m)
    inv_m = 0.0 if m == math.inf else 1.0 / m
    worst_v, worst = -1, math.inf
    for i, (_, G, G2, q) in enumerate(_local_forms(g)):
        M = G2 - inv_m * np.outer(q, q) - K * G
        lam = sym_eigen(M).lam_min
        if lam < worst:
            worst_v, worst = i, lam
    return CDCertificate(worst >= -PSD_TOL, worst_v, float(worst), m, K)


def _holds_fast(g: Hypergraph, m: float, K: float) -> bool:
    """Cholesky screen of every ``M_i + tol I``; only steers the search in :func:`best_K`."""
    inv_m = 0.0 if m == math.inf else 1.0 / m
    for _, G, G2, q in _local_forms(g):
        M = G2 - inv_m * np.outer(q, q) - K * G
        try:
            np.linalg.cholesky(M + PSD_TOL * np.eye(len(M)))
        except np.linalg.LinAlgError:
            return False
    return True


def best_K(g: Hypergraph, m: float) -> float:
    """Largest ``K`` (to within 1e-6, from below) for which ``CD(m, K)`` holds.

    Bisection is steered by a Cholesky screen; the returned value is then
    confirmed by :func:`cd_check` and stepped down if the two disagree at the
    boundary.
    """
    _check_dimension(m)
    lo, hi = -4.0 * float(g.degrees.max()), 2.0
    for _ in range(60):
        if _holds_fast(g, m, lo):
            break
        lo *= 2.0
    else:
        raise NoConvergence("no K satisfies CD(m, K) in the search range")
    for _ in range(60):
        if not _holds_fast(g, m, hi):
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise NoConvergence("CD(m, K) holds for every K tried")
    while hi - lo > K_RESOLUTION:
        mid = 0.5 * (lo + hi)
        if _holds_fast(g, m, mid):
            lo = mid
        else:
            hi = mid
    for _ in range(64):
        if cd_check(g, m, lo).holds:
            return lo
        lo -= K_RESOLUTION
    raise NoConvergence("the certified K could not be confirmed by the eigenvalue test")


def _as_distribution(g: Hypergraph, p, name: str) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (g.n,):
        raise NotDistribution(f"{name} must have one entry per vertex")
    if np.any(p < 0) or abs(p.sum() - 1.0) > 1e-12:
        raise NotDistribution(f"{name} is not a probability vector (sum {p.sum()!r})")
    return p


def wasserstein(g: Hypergraph, mu, nu) -> TransportResult:
    """Exact ``W1`` between two vertex distributions under hop distance."""
    mu = _as_distribution(g, mu, "mu")
    nu = _as_distribution(g, nu, "nu")
    if not g.is_connected():
        raise Disconnected("transport distance needs a connected hypergraph")
    src, dst = np.flatnonzero(mu), np.flatnonzero(nu)
    C = g.distance_matrix[np.ix_(src, dst)].astype(float)
    a, b = mu[src], nu[dst]
    # the simplex needs exactly balanced totals; push rounding into the largest mass
    b = b.copy()
    b[np.argmax(b)] += a.sum() - b.sum()
    sol = transport(a, b, C)
    neg, gap = sol.certificate_gap(a, b, C)
    if neg < -CERT_TOL or gap > CERT_TOL:
        raise NoConvergence(f"transport optimality certificate failed (reduced {neg}, gap {gap})")
    plan = np.zeros((g.n, g.n))
    plan[np.ix_(src, dst)] = sol.plan
    return TransportResult(sol.cost, plan, gap)


def ollivier_kappa(g: Hypergraph, x: int, y: int) -> OllivierResult:
    if not g.adjacent(x, y):
        raise NotAdjacent(f"vertices {x} and {y} share no edge")
    P = transition_kernel(g)
    tr = wasserstein(g, P[x], P[y])
    return OllivierResult((x, y), 1.0 - tr.w1, tr.plan, tr.w1)


def scalar_curvature(g: Hypergraph, x: int) -> float:
    """``(1/d_x) * sum_{y ~ x} kappa(x, y)`` over the distinct neighbours of ``x``."""
    total = sum(ollivier_kappa(g, x, y).kappa for y in sorted(g.neighbors[x]))
    return total / float(g.degrees[x])


def min_ollivier(g: Hypergraph) -> tuple[float, tuple[int, int]]:
    best, pair = math.inf, (-1, -1)
    for x in range(g.n):
        for y in sorted(g.neighbors[x]):
            if y > x:
                k = ollivier_kappa(g, x, y).kappa
                if k < best:
                    best, pair = k, (x, y)
    return best, pair


def crv3(g: Hypergraph) -> BoundReport:
    """``kappa <= lambda_2(Delta)`` and ``lambda_n(Delta) <= 2 - kappa``, i.e. ``kappa <= min(l2, 2 - ln)``."""
    if g.num_edges == 0 or not g.is_connected() or g.n < 2:
        return not_applicable("CRV-3", "<=", ["needs a connected hypergraph with at least one edge"])
    kappa, pair = min_ollivier(g)
    lam = normalized_spectrum(g).eigenvalues
    l2, ln = float(lam[1]), float(lam[-1])
    return evaluated(
        "CRV-3", "<=", kappa, min(l2, 2.0 - ln),
        kappa_pair=list(pair), lambda_2=l2, lambda_n=ln,
        left_margin=l2 - kappa, right_margin=2.0 - kappa - ln,
    )


def crv2(g: Hypergraph, m: float, K: float) -> BoundReport:
    """Lichnerowicz-type bound ``lambda_2(Delta) >= m K / (m - 1)`` under ``CD(m, K)``, ``K > 0``."""
    _check_dimension(m)
    ratio = 1.0 if m == math.inf else m / (m - 1.0)
    base = dict(m=None if m == math.inf else m, K=K)
    if not g.is_connected() or g.n < 2:
        return not_applicable("CRV-2", ">=", ["needs a connected hypergraph"], **base)
    if K <= 0:
        return not_applicable("CRV-2", ">=", [f"K = {K:.6g} is not positive"], **base)
    cert = cd_check(g, m, K)
    if not cert.holds:
        return not_applicable("CRV-2", ">=", [f"CD({m}, {K:.6g}) does not hold"], **base)
    l2 = float(normalized_spectrum(g).eigenvalues[1])
    return evaluated("CRV-2", ">=", l2, ratio * K, **base)


def curvature_spectral_audit(g: Hypergraph, extra: tuple[tuple[float, float], ...] = ()) -> list[BoundReport]:
    """CRV-3, then CRV-2 at ``(2, best_K(g, 2))`` and at every extra ``(m, K)``."""
    if not g.is_connected() or g.num_edges == 0:
        reason = ["needs a connected hypergraph with at least one edge"]
        return [not_applicable("CRV-3", "<=", reason), not_applicable("CRV-2", ">=", reason)]
    reports = [crv3(g), crv2(g, 2.0, best_K(g, 2.0))]
    reports += [crv2(g, m, K) for m, K in extra]
    return reports
