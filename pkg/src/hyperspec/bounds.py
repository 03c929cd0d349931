"""Audit spectral inequalities against exact combinatorial quantities.

Each catalog entry checks its own hypotheses first. A failed hypothesis gives a
``not-applicable`` report, never a verdict. Subset- and pair-parameterized
entries take their sets from ``options`` in :func:`evaluate` and are swept
over many sets by :func:`audit_all`, which keeps the tightest instance.

Floors and ceilings of bounds are taken with a 1e-9 guard, so a quotient that
is an integer up to rounding is not pushed to the neighbouring integer.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Any, Callable, Iterable, Mapping

import numpy as np

from . import curvature, oracles
from .errors import InvalidOption, MissingOption, NoCutExists, TooLarge, UnknownBound
from .families import cartesian_product, complete_bipartite_uniform, complete_uniform, join, uniform_complement
from .hypergraph import Hypergraph
from .operators import phi
from .spectra import (
    adjacency_spectrum,
    distinct_count,
    laplacian_spectrum,
    normalized_spectrum,
    perron_vector,
    second_largest_abs,
    spectral_radius,
    zero_multiplicity,
)
from .verdict import BoundReport, combined, evaluated, not_applicable

EXHAUSTIVE_MAX_N = 18
SAMPLED_SUBSETS = 200
SAMPLED_PAIRS = 200
MAX_DERIVED_N = 200
ROUND_GUARD = 1e-9
SPECTRUM_TOL = 1e-7
CHUNK = 16_384


def _floor(x: float) -> int:
    return math.floor(x + ROUND_GUARD)


def _ceil(x: float) -> int:
    return math.ceil(x - ROUND_GUARD)


class _Context:
    """Per-hypergraph quantities shared by the catalog entries, computed on demand."""

    def __init__(self, g: Hypergraph):
        self.g = g

    @cached_property
    def n(self) -> int:
        return self.g.n

    @cached_property
    def deg(self) -> np.ndarray:
        return self.g.degrees.astype(float)

    @cached_property
    def has_edges(self) -> bool:
        return self.g.num_edges > 0

    @cached_property
    def connected(self) -> bool:
        return self.g.n >= 2 and self.g.is_connected()

    @cached_property
    def diam(self) -> int:
        return int(self.g.distance_matrix.max())

    @cached_property
    def nonadjacent(self) -> bool:
        return self.g.has_nonadjacent_pair()

    @cached_property
    def A(self):
        return adjacency_spectrum(self.g)

    @cached_property
    def L(self):
        return laplacian_spectrum(self.g)

    @cached_property
    def N(self):
        return normalized_spectrum(self.g)

    @cached_property
    def incidence(self) -> np.ndarray:
        B = np.zeros((self.g.num_edges, self.n), dtype=np.int32)
        for k, e in enumerate(self.g.edges):
            B[k, list(e)] = 1
        return B

    @cached_property
    def neighbor_matrix(self) -> np.ndarray:
        N = np.zeros((self.n, self.n), dtype=np.int32)
        for i, nb in enumerate(self.g.neighbors):
            N[i, list(nb)] = 1
        return N

    @cached_property
    def cheeger_counting(self):
        return oracles.cheeger(self.g, "counting")

    @cached_property
    def cheeger_volume(self):
        return oracles.cheeger(self.g, "volume")

    @cached_property
    def chromatic(self):
        return oracles.strong_chromatic_number(self.g)

    @cached_property
    def weak_connectivity(self):
        return oracles.weak_vertex_connectivity(self.g)


@dataclass(frozen=True)
class _Entry:
    relation: str
    must_hold: bool
    run: Callable[[_Context, Mapping[str, Any]], BoundReport]
    sweep: Callable[[_Context, int], BoundReport] | None = None


def _na(bid: str, rel: str, *reasons: str, must_hold: bool = True) -> BoundReport:
    return not_applicable(bid, rel, list(reasons), must_hold=must_hold)


def _need_connected(c: _Context) -> str | None:
    if not c.connected:
        return "needs a connected hypergraph on at least two vertices"
    return None


# ---------------------------------------------------------------- adjacency


def _adj1(c, o):
    if not c.has_edges:
        return _na("ADJ-1", "<=", "needs at least one edge")
    d = c.deg
    best = max(math.sqrt(d[i] * d[j]) for i in range(c.n) for j in c.g.neighbors[i])
    return evaluated("ADJ-1", "<=", spectral_radius(c.A), best)


def _diam_ratio_pre(c) -> tuple[str | None, float, float]:
    lmax, theta = spectral_radius(c.A), second_largest_abs(c.A)
    if not theta < lmax - SPECTRUM_TOL:
        return f"needs theta < lambda_max (theta = {theta:.6g}, lambda_max = {lmax:.6g})", lmax, theta
    return None, lmax, theta


def _log_ratio_floor(numerator: float, lmax: float, theta: float) -> int:
    if theta <= 0.0:
        return 1
    return _floor(1.0 + math.log(numerator) / math.log(lmax / theta))


def _adj2(c, o):
    why = _need_connected(c)
    if why:
        return _na("ADJ-2", "<=", why)
    if c.g.corank < 3:
        return _na("ADJ-2", "<=", f"needs every edge to have at least 3 vertices (co-rank {c.g.corank})")
    why, lmax, theta = _diam_ratio_pre(c)
    if why:
        return _na("ADJ-2", "<=", why)
    alpha = float(perron_vector(c.g).min())
    bound = _log_ratio_floor((1.0 - alpha**2) / alpha**2, lmax, theta)
    return evaluated("ADJ-2", "<=", c.diam, bound, alpha=alpha, theta=theta, lambda_max=lmax)


def _adj3(c, o):
    why = _need_connected(c)
    if why:
        return _na("ADJ-3", "<=", why)
    if not c.g.is_regular():
        return _na("ADJ-3", "<=", "needs a regular hypergraph")
    why, lmax, theta = _diam_ratio_pre(c)
    if why:
        return _na("ADJ-3", "<=", why)
    k = float(c.deg[0])
    if c.n == 2:
        bound = 1
    else:
        bound = _log_ratio_floor(c.n - 1.0, k, theta)
    return evaluated("ADJ-3", "<=", c.diam, bound, k=k, theta=theta)


def _adj4(c, o):
    why = _need_connected(c)
    if why:
        return _na("ADJ-4", "<", why)
    return evaluated("ADJ-4", "<", c.diam, distinct_count(c.A))


def _adj5(c, o):
    m = c.g.uniform_m
    if m is None or not c.g.is_regular():
        return _na("ADJ-5", ">=", "needs a uniform regular hypergraph")
    n, k = c.n, float(c.deg[0])
    theta = comb(n - 2, m - 2) / (m - 1)
    bound = k - theta - comb(n - 1, m - 1)
    return evaluated("ADJ-5", ">=", c.A.lam_min, bound, k=k, theta=theta)


def _chromatic(c, bid, rel):
    if not c.has_edges:
        return None, _na(bid, rel, "needs at least one edge")
    try:
        return c.chromatic, None
    except TooLarge as exc:
        return None, _na(bid, rel, str(exc))


def _col1(c, o):
    col, na = _chromatic(c, "COL-1", "<=")
    if na:
        return na
    return evaluated("COL-1", "<=", col.chi, 1.0 + (c.g.rank - 1) * c.A.lam_max)


def _col2(c, o):
    col, na = _chromatic(c, "COL-2", ">=")
    if na:
        return na
    return evaluated("COL-2", ">=", col.chi, 1.0 - c.A.lam_max / c.A.lam_min)


def _col3(c, o):
    if not c.has_edges:
        return _na("COL-3", ">=", "needs at least one edge")
    return evaluated("COL-3", ">=", abs(c.A.lam_min), 1.0 / (c.g.rank - 1))


# ---------------------------------------------------------------- Laplacian


def _lap1(c, o):
    lam = c.L.eigenvalues
    return evaluated("LAP-1", "<=", float(np.max(np.abs(lam))), 2.0 * float(c.deg.max(initial=0.0)))


def _lap2(c, o):
    why = _need_connected(c)
    if why:
        return _na("LAP-2", "<=", why)
    if c.n < 3:
        return _na("LAP-2", "<=", "needs at least 3 vertices")
    if not c.nonadjacent:
        return _na("LAP-2", "<=", "needs a pair of nonadjacent vertices")
    if c.deg.max() > c.g.corank:
        return _na("LAP-2", "<=", f"needs d_max <= co-rank ({int(c.deg.max())} > {c.g.corank})")
    try:
        kw, cut = c.weak_connectivity
    except (TooLarge, NoCutExists) as exc:
        return _na("LAP-2", "<=", str(exc))
    return evaluated("LAP-2", "<=", c.L.k(2), kw, weak_cut=sorted(cut))


def _subset_pre(c, bid):
    if not c.has_edges:
        return _na(bid, ">=", "needs at least one edge")
    return None


def _as_set(c, S, name="S") -> frozenset[int]:
    S = frozenset(int(v) for v in S)
    if not S or len(S) >= c.n or any(not 0 <= v < c.n for v in S):
        raise InvalidOption(f"{name} must be a nonempty proper subset of 0..{c.n - 1}")
    return S


def _masks_from(c, sets: Iterable[Iterable[int]]) -> np.ndarray:
    sets = list(sets)
    M = np.zeros((len(sets), c.n), dtype=np.int32)
    for k, s in enumerate(sets):
        M[k, list(s)] = 1
    return M


def _subset_masks(c, seed: int, half: bool = True):
    """All ``S`` with ``1 <= |S| <= n/2`` (``|S| < n`` unless ``half``) for small ``n``, else seeded random subsets.

    ``half`` suits bounds whose two sides are unchanged by ``S -> V \\ S``.
    """
    n = c.n
    top = n // 2 if half else n - 1
    if n <= EXHAUSTIVE_MAX_N:
        def gen():
            batch = []
            for k in range(1, top + 1):
                for s in combinations(range(n), k):
                    batch.append(s)
                    if len(batch) == CHUNK:
                        yield _masks_from(c, batch)
                        batch = []
            if batch:
                yield _masks_from(c, batch)
        return gen(), {"mode": "exhaustive"}
    rng = np.random.default_rng(seed)
    sets = []
    for _ in range(SAMPLED_SUBSETS):
        size = int(rng.integers(1, top + 1))
        sets.append(np.sort(rng.choice(n, size=size, replace=False)))
    return iter([_masks_from(c, sets)]), {"mode": "sampled", "seed": seed}


def _lap3_arrays(c, M):
    n, r, cr = c.n, c.g.rank, c.g.corank
    s = M.sum(axis=1).astype(float)
    counts = M @ c.incidence.T
    sizes = c.incidence.sum(axis=1)
    boundary = ((counts > 0) & (counts < sizes)).sum(axis=1).astype(float)
    w = s * (n - s) / n
    upper = (r - 1) * c.L.lam_max * w
    lower = (cr - 1) / (r * r // 4) * c.L.k(2) * w
    return boundary, upper, lower


def _lap3_report(c, S, boundary, upper, lower, **details):
    return combined("LAP-3", [
        ("upper", boundary, upper, "<="),
        ("lower", boundary, lower, ">="),
    ], S=sorted(S), **details)


def _lap3(c, o):
    na = _subset_pre(c, "LAP-3")
    if na:
        return na
    S = _as_set(c, _option(o, "S", "LAP-3"))
    b, u, l = _lap3_arrays(c, _masks_from(c, [S]))
    return _lap3_report(c, S, b[0], u[0], l[0])


def _sweep_worst(c, seed, arrays, margins, half=True):
    """Scan subsets chunk by chunk; return ``(worst mask, its arrays, count, info)``."""
    chunks, info = _subset_masks(c, seed, half)
    best = None
    total = 0
    for M in chunks:
        vals = arrays(c, M)
        mg = margins(*vals)
        k = int(np.argmin(mg))
        total += len(M)
        if best is None or mg[k] < best[0]:
            best = (float(mg[k]), M[k].copy(), tuple(float(v[k]) for v in vals))
    return best[1], best[2], total, info


def _lap3_sweep(c, seed):
    na = _subset_pre(c, "LAP-3")
    if na:
        return na
    mask, vals, total, info = _sweep_worst(
        c, seed, _lap3_arrays, lambda b, u, l: np.minimum(u - b, b - l)
    )
    S = frozenset(np.flatnonzero(mask).tolist())
    return _lap3_report(c, S, *vals, subsets_checked=total, **info)


def _cheeger(c, bid, rel, measure):
    why = _need_connected(c)
    if why:
        return None, _na(bid, rel, why)
    try:
        return (c.cheeger_counting if measure == "counting" else c.cheeger_volume), None
    except TooLarge as exc:
        return None, _na(bid, rel, str(exc))


def _lap4(c, o):
    ch, na = _cheeger(c, "LAP-4", ">=", "counting")
    if na:
        return na
    r, cr = c.g.rank, c.g.corank
    bound = 2.0 * c.L.k(2) * (cr - 1) / (r * (r - 1))
    return evaluated("LAP-4", ">=", ch.value, bound, witness=sorted(ch.witness))


def _lap5(c, o):
    ch, na = _cheeger(c, "LAP-5", "<", "counting")
    if na:
        return na
    l2, dmax = c.L.k(2), float(c.deg.max())
    bound = (c.g.rank - 1) * math.sqrt(max(0.0, (2.0 * dmax - l2) * l2))
    return evaluated("LAP-5", "<", ch.value, bound, witness=sorted(ch.witness))


def _lap6(c, o):
    why = _need_connected(c)
    if why:
        return _na("LAP-6", ">=", why)
    return evaluated("LAP-6", ">=", c.diam, 4.0 / (c.n * (c.g.rank - 1) * c.L.k(2)))


def _ratio_pre(c, bid, which, rel="<="):
    """Preconditions shared by the log-ratio bounds; ``which`` names the spectrum ("L" or "N")."""
    why = _need_connected(c)
    if why:
        return _na(bid, rel, why)
    if which == "N" and not _no_isolated(c):
        return _na(bid, rel, "needs at least two vertices and no isolated vertex")
    spec = getattr(c, which)
    if not c.nonadjacent:
        return _na(bid, rel, "needs a pair of nonadjacent vertices")
    if not spec.lam_max > spec.k(2) + SPECTRUM_TOL:
        return _na(bid, rel, "needs lambda_n > lambda_2")
    return None


def _log_ratio(spec) -> float:
    l2, ln = spec.k(2), spec.lam_max
    return math.log((ln + l2) / (ln - l2))


def _pair_ok(c, V1, V2) -> str | None:
    if V1 == V2:
        return "needs V1 != V2"
    if V1 == frozenset(range(c.n)) - V2:
        return "needs V1 != V \\ V2"
    return None


def _pair_bound(num: float, den: float, log_ratio: float) -> int:
    # distances are nonnegative path lengths, so the ceiling is taken at 0 or above
    return max(0, _ceil(math.log(math.sqrt(num / den)) / log_ratio))


def _set_distance(c, V1, V2) -> int:
    D = c.g.distance_matrix
    return int(D[np.ix_(sorted(V1), sorted(V2))].min())


def _pair_terms(c, bid, V1, V2):
    if bid == "LAP-7":
        n = c.n
        return (n - len(V1)) * (n - len(V2)), len(V1) * len(V2), _log_ratio(c.L)
    vol = c.deg.sum()
    v1, v2 = c.deg[sorted(V1)].sum(), c.deg[sorted(V2)].sum()
    return (vol - v1) * (vol - v2), v1 * v2, _log_ratio(c.N)


def _pair_eval(c, bid, o):
    na = _ratio_pre(c, bid, "L" if bid == "LAP-7" else "N")
    if na:
        return na
    V1 = _as_set(c, _option(o, "V1", bid), "V1")
    V2 = _as_set(c, _option(o, "V2", bid), "V2")
    why = _pair_ok(c, V1, V2)
    if why:
        return _na(bid, "<=", why)
    num, den, lr = _pair_terms(c, bid, V1, V2)
    return evaluated(bid, "<=", _set_distance(c, V1, V2), _pair_bound(num, den, lr),
                     V1=sorted(V1), V2=sorted(V2))


def _audit_pairs(c, seed):
    """Singleton pairs, each vertex against its far BFS shells, then seeded random disjoint pairs."""
    n = c.n
    D = c.g.distance_matrix
    pairs = [(frozenset([i]), frozenset([j])) for i in range(n) for j in range(i + 1, n)]
    for i in range(n):
        for k in range(2, int(D[i].max()) + 1):
            pairs.append((frozenset([i]), frozenset(np.flatnonzero(D[i] >= k).tolist())))
    rng = np.random.default_rng(seed)
    for _ in range(SAMPLED_PAIRS):
        perm = rng.permutation(n)
        a = int(rng.integers(1, n - 1))
        b = int(rng.integers(1, n - a))
        pairs.append((frozenset(perm[:a].tolist()), frozenset(perm[a:a + b].tolist())))
    return [p for p in pairs if _pair_ok(c, *p) is None]


def _pair_sweep(c, seed, bid):
    na = _ratio_pre(c, bid, "L" if bid == "LAP-7" else "N")
    if na:
        return na
    worst = None
    pairs = _audit_pairs(c, seed)
    for V1, V2 in pairs:
        num, den, lr = _pair_terms(c, bid, V1, V2)
        d, b = _set_distance(c, V1, V2), _pair_bound(num, den, lr)
        if worst is None or b - d < worst[0]:
            worst = (b - d, V1, V2, d, b)
    _, V1, V2, d, b = worst
    return evaluated(bid, "<=", d, b, V1=sorted(V1), V2=sorted(V2), pairs_checked=len(pairs), seed=seed)


def _lap8(c, o):
    na = _ratio_pre(c, "LAP-8", "L")
    if na:
        return na
    return evaluated("LAP-8", "<=", c.diam, _ceil(math.log(c.n - 1) / _log_ratio(c.L)))


def _lap9_arrays(c, M):
    n = c.n
    l2, ln = c.L.k(2), c.L.lam_max
    lam = 2.0 * l2 / (ln + l2)
    x = (1.0 - lam) ** 2
    s = M.sum(axis=1).astype(float)
    reach = (M @ c.neighbor_matrix) > 0
    delta = (reach & (M == 0)).sum(axis=1).astype(float)
    ratio = delta / s
    first = (n - s) * (1.0 - x) / (x * (n - s) + s)
    second = np.where(s <= n / 2.0, 2.0 * ln * l2 / (ln**2 + l2**2), -np.inf)
    return ratio, first, second


def _lap9_report(c, S, ratio, first, second, **details):
    parts = [("general", ratio, first, ">=")]
    if second > -np.inf:
        parts.append(("half", ratio, second, ">="))
    return combined("LAP-9", parts, S=sorted(S), **details)


def _lap9(c, o):
    na = _ratio_pre(c, "LAP-9", "L", ">=")
    if na:
        return na
    S = _as_set(c, _option(o, "S", "LAP-9"))
    r, f, s = _lap9_arrays(c, _masks_from(c, [S]))
    return _lap9_report(c, S, r[0], f[0], s[0])


def _lap9_sweep(c, seed):
    na = _ratio_pre(c, "LAP-9", "L", ">=")
    if na:
        return na
    mask, vals, total, info = _sweep_worst(
        c, seed, _lap9_arrays, lambda r, f, s: np.minimum(r - f, r - s), half=False
    )
    S = frozenset(np.flatnonzero(mask).tolist())
    return _lap9_report(c, S, *vals, subsets_checked=total, **info)


def _edge_minimum(c) -> float:
    d = c.deg
    return min((d[list(e)].sum() - len(e)) / len(e) for e in c.g.edges)


def _lap10(c, o):
    why = _need_connected(c)
    if why or c.n <= 2:
        return _na("LAP-10", "<=", why or "needs more than 2 vertices", must_hold=False)
    return evaluated("LAP-10", "<=", c.L.k(2), _edge_minimum(c), must_hold=False,
                     note="audited only: K^3_4 has lambda_2 = 4 against an edge minimum of 2")


def _lap11(c, o):
    why = _need_connected(c)
    if why or c.n <= 2:
        return _na("LAP-11", ">=", why or "needs more than 2 vertices")
    return evaluated("LAP-11", ">=", c.L.lam_max, _edge_minimum(c))


def _uniform_pre(c, bid, min_m=3):
    why = _need_connected(c)
    if why:
        return _na(bid, "<=", why)
    m = c.g.uniform_m
    if m is None or m < min_m:
        return _na(bid, "<=", f"needs an m-uniform hypergraph with m >= {min_m}")
    return None


def _two_degree_terms(c):
    """``(m, d, m_i, D_max)`` with ``m_i = (sum_{j ~ i} d_j) / (d_i (m - 1))``."""
    m = c.g.uniform_m
    d = c.deg
    mi = np.array([sum(d[j] for j in c.g.neighbors[i]) for i in range(c.n)]) / (d * (m - 1))
    cod = c.g.codegrees.copy()
    np.fill_diagonal(cod, 0)
    return m, d, mi, float(cod.max())


def _lap12(c, o):
    na = _uniform_pre(c, "LAP-12")
    if na:
        return na
    m, d, mi, Dm = _two_degree_terms(c)
    rad = 4 * (m - 1) ** 2 * d * mi * Dm**2 - 2 * d * (m - 1) + 1
    vals = (2 * d * (m - 1) - 1 + np.sqrt(rad)) / (2 * (m - 1))
    return evaluated("LAP-12", "<=", c.L.lam_max, float(vals.max()), D_max=Dm)


def _lap13(c, o):
    na = _uniform_pre(c, "LAP-13")
    if na:
        return na
    m = c.g.uniform_m
    dmax, dmin, E = float(c.deg.max()), float(c.deg.min()), c.g.num_edges
    bound = (2 * dmax * (m - 1) - 1 + math.sqrt(4 * (m - 1) ** 2 * dmax**2 * E**2 - 2 * dmin * (m - 1) + 1)) / (2 * (m - 1))
    return evaluated("LAP-13", "<=", c.L.lam_max, bound)


def _lap14(c, o):
    na = _uniform_pre(c, "LAP-14", min_m=2)
    if na:
        return na
    m = c.g.uniform_m
    d, cod, nb = c.deg, c.g.codegrees, c.g.neighbors
    best = -math.inf
    for i in range(c.n):
        for j in nb[i]:
            # j is not adjacent to itself, so k = j is part of the first sum (and k = i of the second)
            only_i = sum(cod[i, k] for k in nb[i] - nb[j])
            only_j = sum(cod[j, k] for k in nb[j] - nb[i])
            both = sum(abs(int(cod[i, k]) - int(cod[j, k])) for k in nb[i] & nb[j])
            best = max(best, 0.5 * (d[i] + d[j] + (only_i + only_j + both) / (m - 1)))
    return evaluated("LAP-14", "<=", c.L.lam_max, best)


# ---------------------------------------------------------------- normalized


def _no_isolated(c):
    return c.n >= 2 and bool(np.all(c.deg > 0))


def _nrm1(c, o):
    if not _no_isolated(c):
        return _na("NRM-1", "<=", "needs at least two vertices and no isolated vertex")
    if not c.nonadjacent:
        return _na("NRM-1", "<=", "needs a pair of nonadjacent vertices")
    return combined("NRM-1", [
        ("lambda_2 <= 1", c.N.k(2), 1.0, "<="),
        ("lambda_n >= 1", c.N.lam_max, 1.0, ">="),
    ])


def _nrm2(c, o):
    m = c.g.uniform_m
    if m is None or m <= 2 or not _no_isolated(c):
        return _na("NRM-2", "<", "needs an m-uniform hypergraph with m > 2 and no isolated vertex")
    zeros = zero_multiplicity(c.N)
    comps = len(c.g.components)
    return combined("NRM-2", [
        ("lambda_1 >= 0", c.N.lam_min, 0.0, ">="),
        ("lambda_n < 2", c.N.lam_max, 2.0, "<"),
        ("zero multiplicity = components", -abs(zeros - comps), 0.0, ">="),
    ], zero_multiplicity=zeros, components=comps)


def _nrm3(c, o):
    ch, na = _cheeger(c, "NRM-3", "<=", "volume")
    if na:
        return na
    r, cr = c.g.rank, c.g.corank
    l2 = c.N.k(2)
    coef = 2.0 * (cr - 1) / (r * (r - 1))
    upper = (r - 1) * math.sqrt(max(0.0, (2.0 - l2) * l2))
    return combined("NRM-3", [
        ("lower", ch.value, coef * l2, ">="),
        ("upper", ch.value, upper, "<"),
    ], witness=sorted(ch.witness), lower_with_combinatorial_lambda_2=coef * c.L.k(2),
        lower_margin_with_combinatorial_lambda_2=ch.value - coef * c.L.k(2))


def _nrm4(c, o):
    why = _need_connected(c)
    if why:
        return _na("NRM-4", ">=", why)
    return evaluated("NRM-4", ">=", c.diam, 4.0 / (c.n * (c.g.rank - 1) * float(c.deg.max()) * c.N.k(2)))


def _nrm6(c, o):
    na = _ratio_pre(c, "NRM-6", "N")
    if na:
        return na
    lr = _log_ratio(c.N)
    dmax, dmin = float(c.deg.max()), float(c.deg.min())
    parts = [("general", c.diam, _ceil(math.log((c.n - 1) * dmax / dmin) / lr), "<=")]
    if c.g.is_regular():
        parts.append(("regular", c.diam, _ceil(math.log(c.n - 1) / lr), "<="))
    return combined("NRM-6", parts)


def _nrm7(c, o):
    na = _uniform_pre(c, "NRM-7", min_m=2)
    if na:
        return na
    m, d, mi, Dm = _two_degree_terms(c)
    rad = 1 - 4 * (m - 1) * d + 4 * (m - 1) ** 2 * d * Dm**2 * mi
    if np.any(rad < 0):
        return _na("NRM-7", "<=", "the square root in the bound is of a negative number")
    vals = (2 * (m - 1) * d - 1 + np.sqrt(rad)) / (2 * (m - 1) * d)
    return evaluated("NRM-7", "<=", c.N.lam_max, float(vals.max()), D_max=Dm)


def _nrm8(c, o):
    na = _uniform_pre(c, "NRM-8", min_m=2)
    if na:
        return na
    m = c.g.uniform_m
    dmax, dmin, E = float(c.deg.max()), float(c.deg.min()), c.g.num_edges
    rad = 1 - 4 * (m - 1) * dmin + 4 * (m - 1) ** 2 * dmax**2 * E**2
    bound = (2 * (m - 1) * dmax - 1 + math.sqrt(rad)) / (2 * (m - 1) * dmin)
    return evaluated("NRM-8", "<=", c.N.lam_max, bound)


# ---------------------------------------------------------------- structure


def _deviation(bid, got: np.ndarray, want: Iterable[float], **details) -> BoundReport:
    want = np.sort(np.asarray(list(want), dtype=float))
    got = np.sort(np.asarray(got, dtype=float))
    if got.shape != want.shape:
        return evaluated(bid, "<=", math.inf, 0.0, **details)
    return evaluated(bid, "<=", float(np.max(np.abs(got - want), initial=0.0)), 0.0, **details)


def _sumset(a, b) -> np.ndarray:
    return (np.asarray(a)[:, None] + np.asarray(b)[None, :]).ravel()


def _str1(c, o):
    other = o.get("other")
    if other is None:
        m = c.g.uniform_m or max(c.g.rank, 2)
        other = complete_uniform(m, m)
    if c.n * other.n > MAX_DERIVED_N:
        return _na("STR-1", "<=", f"product has more than {MAX_DERIVED_N} vertices")
    prod = cartesian_product(c.g, other)
    return combined("STR-1", [
        ("adjacency", _deviation("STR-1", adjacency_spectrum(prod).eigenvalues,
                                 _sumset(c.A.eigenvalues, adjacency_spectrum(other).eigenvalues)).subject, 0.0, "<="),
        ("laplacian", _deviation("STR-1", laplacian_spectrum(prod).eigenvalues,
                                 _sumset(c.L.eigenvalues, laplacian_spectrum(other).eigenvalues)).subject, 0.0, "<="),
    ], factor_n=other.n, factor_edges=[list(e) for e in other.edges])


def _str2(c, o):
    m = c.g.uniform_m or o.get("m")
    if m is None or c.g.uniform_m is None and c.has_edges:
        return _na("STR-2", "<=", "needs a uniform hypergraph")
    if c.n > MAX_DERIVED_N:
        return _na("STR-2", "<=", f"complement limited to {MAX_DERIVED_N} vertices")
    comp = uniform_complement(c.g, m)
    p = phi(m, c.n)
    want = [0.0] + [p - lam for lam in c.L.eigenvalues[1:]]
    return _deviation("STR-2", laplacian_spectrum(comp).eigenvalues, want, m=m, phi=p)


def _str3(c, o):
    other = o.get("other", c.g)
    m = c.g.uniform_m
    if m is None or other.uniform_m != m:
        return _na("STR-3", "<=", "needs two hypergraphs that are uniform with the same m")
    n1, n2 = c.n, other.n
    if n1 + n2 > MAX_DERIVED_N:
        return _na("STR-3", "<=", f"join limited to {MAX_DERIVED_N} vertices")
    N = n1 + n2
    mu = laplacian_spectrum(other).eigenvalues
    want = [0.0, phi(m, N)]
    want += [phi(m, N) - phi(m, n1) + lam for lam in c.L.eigenvalues[1:]]
    want += [phi(m, N) - phi(m, n2) + lam for lam in mu[1:]]
    return _deviation("STR-3", laplacian_spectrum(join(c.g, other, m)).eigenvalues, want, n1=n1, n2=n2, m=m)


def _str4_spectrum(n1, n2, m):
    N = n1 + n2
    return [0.0, phi(m, N)] + [phi(m, N) - phi(m, n1)] * (n1 - 1) + [phi(m, N) - phi(m, n2)] * (n2 - 1)


def _str4(c, o):
    n1 = _option(o, "n1", "STR-4")
    n2 = _option(o, "n2", "STR-4")
    m = int(o.get("m", c.g.uniform_m or 3))
    h = complete_bipartite_uniform(int(n1), int(n2), m)
    return _deviation("STR-4", laplacian_spectrum(h).eigenvalues, _str4_spectrum(int(n1), int(n2), m),
                      n1=int(n1), n2=int(n2), m=m)


def _str4_sweep(c, seed):
    m = c.g.uniform_m
    if m is not None:
        for n1 in range(1, c.n):
            if c.n - n1 >= 1 and m <= c.n and complete_bipartite_uniform(n1, c.n - n1, m) == c.g:
                return _deviation("STR-4", c.L.eigenvalues, _str4_spectrum(n1, c.n - n1, m),
                                  n1=n1, n2=c.n - n1, m=m)
    return _na("STR-4", "<=", "not a complete bipartite uniform hypergraph in canonical labelling")


# ---------------------------------------------------------------- curvature


def _crv2(c, o):
    if not c.connected or not c.has_edges:
        return _na("CRV-2", ">=", "needs a connected hypergraph with at least one edge")
    m = float(o.get("m", 2.0))
    K = o.get("K")
    if K is None:
        K = curvature.best_K(c.g, m)
    return curvature.crv2(c.g, m, float(K))


def _crv3(c, o):
    return curvature.crv3(c.g)


# ---------------------------------------------------------------- catalog


def _option(o: Mapping[str, Any], key: str, bid: str):
    if key not in o or o[key] is None:
        raise MissingOption(f"{bid} needs option {key!r}")
    return o[key]


CATALOG: dict[str, _Entry] = {
    "ADJ-1": _Entry("<=", True, _adj1),
    "ADJ-2": _Entry("<=", True, _adj2),
    "ADJ-3": _Entry("<=", True, _adj3),
    "ADJ-4": _Entry("<", True, _adj4),
    "ADJ-5": _Entry(">=", True, _adj5),
    "COL-1": _Entry("<=", True, _col1),
    "COL-2": _Entry(">=", True, _col2),
    "COL-3": _Entry(">=", True, _col3),
    "LAP-1": _Entry("<=", True, _lap1),
    "LAP-2": _Entry("<=", True, _lap2),
    "LAP-3": _Entry(">=", True, _lap3, _lap3_sweep),
    "LAP-4": _Entry(">=", True, _lap4),
    "LAP-5": _Entry("<", True, _lap5),
    "LAP-6": _Entry(">=", True, _lap6),
    "LAP-7": _Entry("<=", True, lambda c, o: _pair_eval(c, "LAP-7", o), lambda c, s: _pair_sweep(c, s, "LAP-7")),
    "LAP-8": _Entry("<=", True, _lap8),
    "LAP-9": _Entry(">=", True, _lap9, _lap9_sweep),
    "LAP-10": _Entry("<=", False, _lap10),
    "LAP-11": _Entry(">=", True, _lap11),
    "LAP-12": _Entry("<=", True, _lap12),
    "LAP-13": _Entry("<=", True, _lap13),
    "LAP-14": _Entry("<=", True, _lap14),
    "NRM-1": _Entry("<=", True, _nrm1),
    "NRM-2": _Entry("<", True, _nrm2),
    "NRM-3": _Entry("<=", True, _nrm3),
    "NRM-4": _Entry(">=", True, _nrm4),
    "NRM-5": _Entry("<=", True, lambda c, o: _pair_eval(c, "NRM-5", o), lambda c, s: _pair_sweep(c, s, "NRM-5")),
    "NRM-6": _Entry("<=", True, _nrm6),
    "NRM-7": _Entry("<=", True, _nrm7),
    "NRM-8": _Entry("<=", True, _nrm8),
    "STR-1": _Entry("<=", True, _str1),
    "STR-2": _Entry("<=", True, _str2),
    "STR-3": _Entry("<=", True, _str3),
    "STR-4": _Entry("<=", True, _str4, _str4_sweep),
    "CRV-2": _Entry(">=", True, _crv2),
    "CRV-3": _Entry("<=", True, _crv3),
}

BOUND_IDS: tuple[str, ...] = tuple(CATALOG)


def _lookup(bound_id: str) -> _Entry:
    try:
        return CATALOG[bound_id]
    except KeyError:
        raise UnknownBound(f"unknown bound id {bound_id!r}; known ids: {', '.join(BOUND_IDS)}") from None


def evaluate(g: Hypergraph, bound_id: str, options: Mapping[str, Any] | None = None) -> BoundReport:
    """Evaluate one catalog entry on ``g``.

    ``options`` may carry ``S`` (LAP-3, LAP-9), ``V1``/``V2`` (LAP-7, NRM-5),
    ``n1``/``n2``/``m`` (STR-4), ``other`` (STR-1, STR-3) and ``m``/``K``
    (CRV-2).
    """
    entry = _lookup(bound_id)
    return entry.run(_Context(g), dict(options or {}))


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("HYPERSPEC_THREADS", "1")))
    except ValueError:
        return 1


def audit_all(g: Hypergraph, seed: int = 0, bound_ids: Iterable[str] | None = None) -> list[BoundReport]:
    """Evaluate every requested catalog entry, sweeping set-parameterized ones.

    Reports come back in catalog order. ``HYPERSPEC_THREADS`` sets the number
    of worker threads; the result does not depend on it.
    """
    ids = list(BOUND_IDS if bound_ids is None else bound_ids)
    entries = [_lookup(b) for b in ids]
    ctx = _Context(g)
    # warm the shared spectra once so threads do not race to build them
    if g.num_edges:
        ctx.A, ctx.L
        if _no_isolated(ctx):
            ctx.N

    def run(entry: _Entry) -> BoundReport:
        if entry.sweep is not None:
            return entry.sweep(ctx, seed)
        return entry.run(ctx, {})

    threads = _thread_count()
    if threads == 1:
        return [run(e) for e in entries]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(run, entries))
