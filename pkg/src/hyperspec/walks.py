"""Simple random walk on a hypergraph: sampling, convergence certificates, equilibrium."""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .errors import IsolatedVertex, NotErgodic, VertexOutOfRange
from .hypergraph import Hypergraph
from .operators import transition_kernel
from .spectra import normalized_spectrum


@dataclass(frozen=True)
class WalkAnalysis:
    rho: float
    stationary: np.ndarray
    possibly_periodic: bool

    def mixing_steps(self, eps: float) -> int:
        """Steps after which ``||P^t f - fbar|| <= eps ||f||`` is guaranteed."""
        if self.rho >= 1.0:
            return math.inf
        return math.ceil(math.log(1.0 / eps) / (1.0 - self.rho))


@dataclass(frozen=True)
class ConvergenceRecord:
    t: int
    lhs: float
    rhs: float

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs + 1e-9


def _degrees(g: Hypergraph) -> np.ndarray:
    d = g.degrees.astype(float)
    if np.any(d == 0):
        raise IsolatedVertex(f"vertex {int(np.flatnonzero(d == 0)[0])} lies in no edge")
    return d


def stationary_distribution(g: Hypergraph) -> np.ndarray:
    d = _degrees(g)
    return d / d.sum()


def is_aperiodic(g: Hypergraph) -> bool:
    """A connected walk is aperiodic iff the adjacency graph has an odd cycle.

    Any edge with three or more vertices contains a triangle, so only
    hypergraphs of co-rank 2 need the bipartiteness search.
    """
    if any(len(e) >= 3 for e in g.edges):
        return True
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors[v]:
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return True
    return False


def analyze(g: Hypergraph) -> WalkAnalysis:
    """Convergence rate ``rho = max(|1 - lambda_2|, |1 - lambda_n|)`` over the normalized spectrum."""
    _degrees(g)
    lam = normalized_spectrum(g).eigenvalues
    rho = float(max(abs(1.0 - lam[1]), abs(1.0 - lam[-1]))) if len(lam) > 1 else 0.0
    return WalkAnalysis(rho, stationary_distribution(g), g.corank <= 2 and not is_aperiodic(g))


def simulate(g: Hypergraph, start: int, steps: int, seed: int) -> np.ndarray:
    """Trajectory ``v_0 .. v_steps`` drawn by inverse CDF from the rows of ``P``.

    Uniforms come from ``numpy.random.default_rng(seed)`` (PCG64); callers
    running independent walks should derive seeds with
    ``numpy.random.SeedSequence(seed).spawn(k)``.
    """
    if not 0 <= start < g.n:
        raise VertexOutOfRange(f"start vertex {start} outside 0..{g.n - 1}")
    P = transition_kernel(g)
    support = [np.flatnonzero(P[v]) for v in range(g.n)]
    cdfs = [np.cumsum(P[v, s]).tolist() for v, s in enumerate(support)]
    targets = [s.tolist() for s in support]
    u = np.random.default_rng(seed).random(steps).tolist()
    path = [start] * (steps + 1)
    v = start
    for t in range(steps):
        cdf = cdfs[v]
        k = bisect_right(cdf, u[t] * cdf[-1])
        v = targets[v][min(k, len(cdf) - 1)]
        path[t + 1] = v
    return np.asarray(path, dtype=np.int64)


def visit_frequencies(g: Hypergraph, path: np.ndarray) -> np.ndarray:
    return np.bincount(path, minlength=g.n) / len(path)


def mu_norm(g: Hypergraph, f: np.ndarray) -> float:
    return float(np.sqrt(np.sum(g.degrees * np.asarray(f, dtype=float) ** 2)))


def equilibrium_apply(g: Hypergraph, f) -> np.ndarray:
    """The constant function ``fbar = sum_i d_i f(i) / vol(V)``."""
    pi = stationary_distribution(g)
    return np.full(g.n, float(pi @ np.asarray(f, dtype=float)))


def _require_ergodic(g: Hypergraph) -> None:
    if not g.is_connected():
        raise NotErgodic("the walk on a disconnected hypergraph is not irreducible")
    if not is_aperiodic(g):
        raise NotErgodic("the walk is periodic (bipartite adjacency)")


def convergence_certificate(g: Hypergraph, f, t: int) -> ConvergenceRecord:
    """Compare ``||P^t f - fbar||_mu`` against ``rho^t ||f||_mu``.

    ``P^t f`` is built from ``t`` matrix-vector products.
    """
    _require_ergodic(g)
    f = np.asarray(f, dtype=float)
    P = transition_kernel(g)
    rho = analyze(g).rho
    x = f.copy()
    for _ in range(t):
        x = P @ x
    lhs = mu_norm(g, x - equilibrium_apply(g, f))
    return ConvergenceRecord(t, lhs, rho**t * mu_norm(g, f))


def convergence_curve(g: Hypergraph, f, t_max: int) -> list[ConvergenceRecord]:
    """Certificates for every ``t = 1..t_max`` from one pass of products."""
    _require_ergodic(g)
    f = np.asarray(f, dtype=float)
    P = transition_kernel(g)
    rho = analyze(g).rho
    fbar = equilibrium_apply(g, f)
    nf = mu_norm(g, f)
    out, x = [], f.copy()
    for t in range(1, t_max + 1):
        x = P @ x
        out.append(ConvergenceRecord(t, mu_norm(g, x - fbar), rho**t * nf))
    return out
