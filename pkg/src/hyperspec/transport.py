"""Exact balanced transportation problems by the transportation simplex.

Start from the northwest-corner basis, improve with MODI (u-v) potentials and
choose entering and leaving cells by Bland's rule so degenerate pivots cannot
cycle. The final potentials are returned as a dual certificate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotDistribution

REDUCED_COST_TOL = 1e-12


@dataclass(frozen=True)
class TransportSolution:
    cost: float
    plan: np.ndarray
    u: np.ndarray
    v: np.ndarray

    def certificate_gap(self, supply, demand, costs) -> tuple[float, float]:
        """``(most negative reduced cost, |primal - dual|)``; both ~0 certify optimality."""
        red = np.asarray(costs) - self.u[:, None] - self.v[None, :]
        dual = float(self.u @ np.asarray(supply) + self.v @ np.asarray(demand))
        return float(min(red.min(), 0.0)), abs(self.cost - dual)


def _northwest_corner(a: np.ndarray, b: np.ndarray):
    m, n = len(a), len(b)
    a, b = a.copy(), b.copy()
    x = np.zeros((m, n))
    basis = []
    i = j = 0
    while True:
        q = min(a[i], b[j])
        x[i, j] = q
        basis.append((i, j))
        a[i] -= q
        b[j] -= q
        if i == m - 1 and j == n - 1:
            break
        # move down only when the row is spent and rows remain, else right
        if (a[i] <= b[j] and i < m - 1) or j == n - 1:
            i += 1
        else:
            j += 1
    return x, basis


def _potentials(costs: np.ndarray, basis: list[tuple[int, int]], m: int, n: int):
    u = np.full(m, np.nan)
    v = np.full(n, np.nan)
    rows: list[list[int]] = [[] for _ in range(m)]
    cols: list[list[int]] = [[] for _ in range(n)]
    for i, j in basis:
        rows[i].append(j)
        cols[j].append(i)
    u[0] = 0.0
    q = deque([("r", 0)])
    while q:
        kind, k = q.popleft()
        if kind == "r":
            for j in rows[k]:
                if np.isnan(v[j]):
                    v[j] = costs[k, j] - u[k]
                    q.append(("c", j))
        else:
            for i in cols[k]:
                if np.isnan(u[i]):
                    u[i] = costs[i, k] - v[k]
                    q.append(("r", i))
    return u, v


def _cycle(basis: list[tuple[int, int]], enter: tuple[int, int], m: int):
    """Cells of the unique cycle through ``enter`` in basis + enter, in traversal order."""
    # bipartite tree: row nodes 0..m-1, column nodes m..m+n-1
    adj: dict[int, list[tuple[int, tuple[int, int]]]] = {}
    for i, j in basis:
        adj.setdefault(i, []).append((m + j, (i, j)))
        adj.setdefault(m + j, []).append((i, (i, j)))
    start, goal = m + enter[1], enter[0]
    prev: dict[int, tuple[int, tuple[int, int]] | None] = {start: None}
    q = deque([start])
    while q:
        node = q.popleft()
        if node == goal:
            break
        for nxt, cell in adj.get(node, []):
            if nxt not in prev:
                prev[nxt] = (node, cell)
                q.append(nxt)
    path = []
    node = goal
    while prev[node] is not None:
        parent, cell = prev[node]
        path.append(cell)
        node = parent
    # path runs row(enter) -> ... -> col(enter); cycle is enter followed by path
    return [enter] + path


def transport(supply, demand, costs, max_iter: int = 10_000) -> TransportSolution:
    """Minimum-cost plan moving ``supply`` onto ``demand``; the totals must agree to 1e-12."""
    a = np.asarray(supply, dtype=float)
    b = np.asarray(demand, dtype=float)
    C = np.asarray(costs, dtype=float)
    if np.any(a < 0) or np.any(b < 0):
        raise NotDistribution("masses must be nonnegative")
    if abs(a.sum() - b.sum()) > 1e-12:
        raise NotDistribution(f"unbalanced problem: {a.sum()} vs {b.sum()}")
    m, n = len(a), len(b)
    x, basis = _northwest_corner(a, b)
    for _ in range(max_iter):
        u, v = _potentials(C, basis, m, n)
        red = C - u[:, None] - v[None, :]
        in_basis = np.zeros((m, n), dtype=bool)
        for cell in basis:
            in_basis[cell] = True
        red[in_basis] = 0.0
        neg = np.argwhere(red < -REDUCED_COST_TOL)
        if len(neg) == 0:
            return TransportSolution(float(np.sum(x * C)), x, u, v)
        enter = (int(neg[0][0]), int(neg[0][1]))  # Bland: lowest index in row-major order
        cyc = _cycle(basis, enter, m)
        minus = cyc[1::2]
        theta = min(x[c] for c in minus)
        leave = min(c for c in minus if x[c] == theta)
        for k, c in enumerate(cyc):
            x[c] += theta if k % 2 == 0 else -theta
        x[leave] = 0.0
        basis.remove(leave)
        basis.append(enter)
    raise NoConvergence(f"transportation simplex exceeded {max_iter} pivots")
