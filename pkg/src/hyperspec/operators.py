"""Connectivity matrices of a hypergraph.

Every pair ``i, j`` sharing an edge ``e`` receives weight ``1 / (|e| - 1)``
from that edge; the adjacency matrix sums these weights, so its row sums are
the vertex degrees. All other matrices are derived from it.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .errors import IsolatedVertex
from .hypergraph import Hypergraph


def adjacency(g: Hypergraph) -> np.ndarray:
    A = np.zeros((g.n, g.n))
    for e in g.edges:
        w = 1.0 / (len(e) - 1)
        for a in range(len(e)):
            i = e[a]
            for b in range(a + 1, len(e)):
                A[i, e[b]] += w
    # only the upper triangle was filled
    return A + A.T


def degree_matrix(g: Hypergraph) -> np.ndarray:
    return np.diag(g.degrees.astype(float))


def laplacian(g: Hypergraph) -> np.ndarray:
    """``L = D - A``."""
    return degree_matrix(g) - adjacency(g)


def _require_no_isolated(g: Hypergraph) -> np.ndarray:
    d = g.degrees.astype(float)
    if np.any(d == 0):
        raise IsolatedVertex(f"vertex {int(np.flatnonzero(d == 0)[0])} lies in no edge")
    return d


def normalized_laplacian(g: Hypergraph) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(Delta, Lsym)`` with ``Delta = I - D^-1 A`` and ``Lsym = I - D^-1/2 A D^-1/2``.

    The two are similar (``Lsym = D^1/2 Delta D^-1/2``) and share a spectrum;
    only ``Lsym`` is symmetric.
    """
    d = _require_no_isolated(g)
    A = adjacency(g)
    I = np.eye(g.n)
    delta = I - A / d[:, None]
    s = 1.0 / np.sqrt(d)
    lsym = I - (s[:, None] * A) * s[None, :]
    lsym = 0.5 * (lsym + lsym.T)
    return delta, lsym


def transition_kernel(g: Hypergraph) -> np.ndarray:
    """Row-stochastic ``P(x, y) = A_xy / d_x`` of the simple random walk."""
    d = _require_no_isolated(g)
    return adjacency(g) / d[:, None]


def complete_weight(n: int, m: int) -> float:
    """``C(n-2, m-2) / (m-1)``: the off-diagonal adjacency entry of K^m_n."""
    return comb(n - 2, m - 2) / (m - 1)


def phi(m: int, n: int) -> float:
    """Nonzero Laplacian eigenvalue of K^m_n, ``n/(n-1) * C(n-1, m-1)``; 0 for ``n < 2``."""
    if n < 2:
        return 0.0
    return n / (n - 1) * comb(n - 1, m - 1)
