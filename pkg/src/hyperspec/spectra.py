"""Dense symmetric eigendecomposition and spectral utilities.

The eigensolver is cyclic Jacobi with round-robin ("tournament") pair
ordering: every round rotates ``n/2`` disjoint index pairs, and because those
rotations commute they are applied together as a couple of vectorised row and
column updates. A sweep visits every pair exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import Disconnected, NoConvergence, NotSymmetric
from .hypergraph import Hypergraph
from .operators import adjacency, laplacian, normalized_laplacian

DEFAULT_TOL = 1e-7
OFF_TOL = 1e-12
MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with orthonormal eigenvectors in matching columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    tol: float = DEFAULT_TOL

    def __len__(self):
        return len(self.eigenvalues)

    @property
    def lam_min(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def lam_max(self) -> float:
        return float(self.eigenvalues[-1])

    def k(self, index: int) -> float:
        """1-based ``lambda_k`` as in ``lambda_1 <= ... <= lambda_n``."""
        return float(self.eigenvalues[index - 1])


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    players = list(range(n)) + ([-1] if n % 2 else [])
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[k], players[m - 1 - k]) for k in range(m // 2)]
        pairs = [(min(a, b), max(a, b)) for a, b in pairs if a >= 0 and b >= 0]
        rounds.append((np.array([p for p, _ in pairs]), np.array([q for _, q in pairs])))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(A: np.ndarray) -> float:
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def jacobi_eigh(M: np.ndarray, max_sweeps: int = MAX_SWEEPS, off_tol: float = OFF_TOL):
    """Eigenvalues (unsorted) and eigenvectors of a symmetric matrix by cyclic Jacobi.

    Sweeps stop once the off-diagonal Frobenius norm is at most
    ``off_tol * ||M||_F``.
    """
    A = np.array(M, dtype=float)
    n = A.shape[0]
    V = np.eye(n)
    fro = float(np.linalg.norm(A))
    if n < 2 or fro == 0.0:
        return np.diag(A).copy(), V
    target = off_tol * fro
    rounds = _round_robin(n)
    for _ in range(max_sweeps + 1):
        if _off_norm(A) <= target:
            return np.diag(A).copy(), V
        for P, Q in rounds:
            apq = A[P, Q]
            live = apq != 0.0
            if not live.any():
                continue
            P, Q, apq = P[live], Q[live], apq[live]
            theta = (A[Q, Q] - A[P, P]) / (2.0 * apq)
            # for huge theta, t ~ 1/(2 theta) avoids overflowing theta**2
            big = np.abs(theta) > 1e150
            safe = np.where(big, 0.0, theta)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(safe) + np.sqrt(safe * safe + 1.0))
            t = np.where(big, 0.5 / np.where(big, theta, 1.0), t)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            Ap, Aq = A[:, P].copy(), A[:, Q].copy()
            A[:, P] = Ap * c - Aq * s
            A[:, Q] = Ap * s + Aq * c
            Ap, Aq = A[P, :].copy(), A[Q, :].copy()
            A[P, :] = c[:, None] * Ap - s[:, None] * Aq
            A[Q, :] = s[:, None] * Ap + c[:, None] * Aq
            A[P, Q] = 0.0
            A[Q, P] = 0.0
            Vp, Vq = V[:, P].copy(), V[:, Q].copy()
            V[:, P] = Vp * c - Vq * s
            V[:, Q] = Vp * s + Vq * c
    raise NoConvergence(f"Jacobi did not converge within {max_sweeps} sweeps")


def _fix_signs(V: np.ndarray) -> np.ndarray:
    # largest-magnitude entry positive; argmax returns the lowest index on ties
    idx = np.argmax(np.abs(V), axis=0)
    signs = np.where(V[idx, np.arange(V.shape[1])] < 0, -1.0, 1.0)
    return V * signs


def sym_eigen(M: np.ndarray, tol: float = DEFAULT_TOL) -> Spectrum:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {M.shape}")
    scale = max(1.0, float(np.max(np.abs(M)))) if M.size else 1.0
    if M.size and float(np.max(np.abs(M - M.T))) > 1e-12 * scale:
        raise NotSymmetric("matrix is not symmetric to within 1e-12")
    w, V = jacobi_eigh(0.5 * (M + M.T))
    order = np.argsort(w, kind="stable")
    return _frozen(w[order], _fix_signs(V[:, order]), tol)


def _frozen(w: np.ndarray, V: np.ndarray, tol: float) -> Spectrum:
    # spectra are cached and shared, so hand out read-only arrays
    w, V = np.array(w), np.array(V)
    w.flags.writeable = False
    V.flags.writeable = False
    return Spectrum(w, V, tol)


def spectrum_residuals(spec: Spectrum, M: np.ndarray) -> dict[str, float]:
    """Largest eigenpair residual, orthonormality defect and trace defect."""
    V, w = spec.eigenvectors, spec.eigenvalues
    res = np.linalg.norm(M @ V - V * w, axis=0)
    return {
        "residual": float(res.max()) if res.size else 0.0,
        "orthonormality": float(np.max(np.abs(V.T @ V - np.eye(len(w))))) if w.size else 0.0,
        "trace": abs(float(np.sum(w)) - float(np.trace(M))),
    }


def spectral_radius(spec: Spectrum) -> float:
    return float(np.max(np.abs(spec.eigenvalues))) if len(spec) else 0.0


def second_largest_abs(spec: Spectrum) -> float:
    """Largest ``|lambda|`` once a single copy of the top eigenvalue is removed."""
    rest = spec.eigenvalues[:-1]
    return float(np.max(np.abs(rest))) if rest.size else 0.0


def clusters(spec: Spectrum, tol: float | None = None) -> list[tuple[float, int]]:
    """Group sorted eigenvalues whose consecutive gaps are at most ``tol``; ``(mean, multiplicity)``."""
    tol = spec.tol if tol is None else tol
    out: list[list[float]] = []
    for lam in spec.eigenvalues:
        if out and lam - out[-1][-1] <= tol:
            out[-1].append(float(lam))
        else:
            out.append([float(lam)])
    return [(float(np.mean(c)), len(c)) for c in out]


def zero_multiplicity(spec: Spectrum, tol: float | None = None) -> int:
    tol = spec.tol if tol is None else tol
    return int(np.sum(np.abs(spec.eigenvalues) <= tol))


def distinct_count(spec: Spectrum, tol: float | None = None) -> int:
    return len(clusters(spec, tol))


@lru_cache(maxsize=128)
def adjacency_spectrum(g: Hypergraph) -> Spectrum:
    return sym_eigen(adjacency(g))


@lru_cache(maxsize=128)
def laplacian_spectrum(g: Hypergraph) -> Spectrum:
    return sym_eigen(laplacian(g))


@lru_cache(maxsize=128)
def normalized_spectrum(g: Hypergraph) -> Spectrum:
    """Spectrum of ``Delta = I - D^-1 A``, computed from its symmetric similar form.

    The returned eigenvectors are those of ``Delta`` itself,
    ``D^-1/2 v`` for each eigenvector ``v`` of the symmetric form, rescaled to
    unit length in the degree-weighted inner product.
    """
    _, lsym = normalized_laplacian(g)
    spec = sym_eigen(lsym)
    X = spec.eigenvectors / np.sqrt(g.degrees.astype(float))[:, None]
    return _frozen(spec.eigenvalues, X, spec.tol)


def perron_vector(g: Hypergraph, A: np.ndarray | None = None) -> np.ndarray:
    """Unit eigenvector of the top adjacency eigenvalue, with positive entries."""
    if not g.is_connected():
        raise Disconnected("the Perron vector is only defined for connected hypergraphs")
    spec = adjacency_spectrum(g) if A is None else sym_eigen(A)
    return spec.eigenvectors[:, -1].copy()
