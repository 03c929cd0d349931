"""Exact combinatorial oracles: Cheeger constants, weak connectivity, strong chromatic number.

Everything here is exhaustive search, so each entry point enforces a vertex
budget and raises :class:`TooLarge` beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from .errors import Disconnected, NoCutExists, TooLarge
from .hypergraph import Hypergraph, make_hypergraph

Measure = Literal["counting", "volume"]

MAX_CHEEGER_N = 24
MAX_CUT_N = 20
MAX_COLOR_N = 20


@dataclass(frozen=True)
class CheegerResult:
    value: float
    boundary: int
    denominator: int
    witness: frozenset[int]
    measure: str


@dataclass(frozen=True)
class ColoringResult:
    chi: int
    assignment: tuple[int, ...]


def _canonical_side(g: Hypergraph, S: frozenset[int], measure: Measure) -> frozenset[int]:
    comp = frozenset(range(g.n)) - S
    if measure == "counting":
        a, b = len(S), len(comp)
    else:
        a, b = int(g.degrees[list(S)].sum()), int(g.degrees[list(comp)].sum())
    if a != b:
        return S if a < b else comp
    return min(S, comp, key=lambda x: sorted(x))


def cheeger(g: Hypergraph, measure: Measure = "counting") -> CheegerResult:
    """Exact Cheeger constant ``min |dS| / min(mu(S), mu(V \\ S))``.

    Only sets containing vertex 0 are visited (a cut and its complement give
    the same ratio), in Gray-code order so that each step moves one vertex and
    the boundary count is updated from that vertex's edges alone. Ratios are
    compared as integer cross products, so the minimum is exact.
    """
    if measure not in ("counting", "volume"):
        raise ValueError(f"unknown measure {measure!r}")
    n = g.n
    if n > MAX_CHEEGER_N:
        raise TooLarge(f"Cheeger enumeration is limited to {MAX_CHEEGER_N} vertices, got {n}")
    if n < 2:
        raise ValueError("the Cheeger constant needs at least two vertices")
    if not g.is_connected():
        raise Disconnected("Cheeger constant of a disconnected hypergraph is 0 by a component cut")

    sizes = [len(e) for e in g.edges]
    incident = g.incident
    deg = [int(x) for x in g.degrees]
    total_vol = sum(deg)
    inside = [0] * len(g.edges)
    in_s = [False] * n

    def toggle(v: int) -> int:
        # returns the change in boundary size
        delta = 0
        step = -1 if in_s[v] else 1
        in_s[v] = not in_s[v]
        for k in incident[v]:
            c0 = inside[k]
            c1 = c0 + step
            inside[k] = c1
            was = 0 < c0 < sizes[k]
            now = 0 < c1 < sizes[k]
            delta += now - was
        return delta

    boundary = toggle(0)
    size, vol = 1, deg[0]
    best: tuple[int, int] | None = None
    best_set: frozenset[int] | None = None
    full = (1 << (n - 1)) - 1
    prev_code = 0
    for k in range(1 << (n - 1)):
        code = k ^ (k >> 1)
        if k:
            bit = (code ^ prev_code).bit_length() - 1
            v = bit + 1
            adding = not in_s[v]
            boundary += toggle(v)
            size += 1 if adding else -1
            vol += deg[v] if adding else -deg[v]
        prev_code = code
        if code == full:
            continue
        den = min(size, n - size) if measure == "counting" else min(vol, total_vol - vol)
        if best is None or boundary * best[1] < best[0] * den:
            best = (boundary, den)
            best_set = _canonical_side(g, frozenset(i for i in range(n) if in_s[i]), measure)
        elif boundary * best[1] == best[0] * den:
            cand = _canonical_side(g, frozenset(i for i in range(n) if in_s[i]), measure)
            if sorted(cand) < sorted(best_set):
                best_set = cand
    b, d = best
    return CheegerResult(b / d, b, d, best_set, measure)


def weak_deletion(g: Hypergraph, W: Iterable[int]) -> tuple[Hypergraph | None, list[int]]:
    """Remove ``W`` from the vertex set and from every edge, dropping edges left with < 2 vertices.

    Returns the relabelled hypergraph on the survivors (None if nobody
    survives) together with the survivors' original labels.
    """
    gone = set(W)
    keep = [v for v in range(g.n) if v not in gone]
    if not keep:
        return None, keep
    relabel = {v: k for k, v in enumerate(keep)}
    edges = set()
    for e in g.edges:
        rest = tuple(relabel[v] for v in e if v not in gone)
        if len(rest) >= 2:
            edges.add(rest)
    return make_hypergraph(len(keep), edges), keep


def _splits(g: Hypergraph, W: tuple[int, ...]) -> bool:
    gone = set(W)
    parent = {v: v for v in range(g.n) if v not in gone}
    if len(parent) < 2:
        return False

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        rest = [v for v in e if v not in gone]
        if len(rest) < 2:
            continue
        r0 = find(rest[0])
        for v in rest[1:]:
            rv = find(v)
            if rv != r0:
                parent[rv] = r0
    return len({find(v) for v in parent}) > 1


def weak_vertex_connectivity(g: Hypergraph) -> tuple[int, frozenset[int]]:
    """Smallest weak vertex cut, by increasing cut size; returns ``(kappa_W, cut)``."""
    if g.n > MAX_CUT_N:
        raise TooLarge(f"weak cut enumeration is limited to {MAX_CUT_N} vertices, got {g.n}")
    if not g.is_connected():
        raise Disconnected("weak connectivity is defined for connected hypergraphs")
    if not g.has_nonadjacent_pair():
        raise NoCutExists("every pair of vertices is adjacent, so no weak vertex cut exists")
    for k in range(1, g.n - 1):
        for W in combinations(range(g.n), k):
            if _splits(g, W):
                return k, frozenset(W)
    # unreachable: deleting all but a nonadjacent pair always splits
    raise NoCutExists("no weak vertex cut found")


def _max_clique(adj: list[set[int]]) -> list[int]:
    best: list[int] = []

    def expand(R, P, X):
        nonlocal best
        if not P and not X:
            if len(R) > len(best):
                best = list(R)
            return
        if len(R) + len(P) <= len(best):
            return
        pivot = max(P | X, key=lambda u: len(adj[u] & P))
        for v in sorted(P - adj[pivot]):
            expand(R + [v], P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    expand([], set(range(len(adj))), set())
    return best


def _k_color(adj: list[set[int]], k: int) -> list[int] | None:
    n = len(adj)
    color = [-1] * n

    def pick() -> int:
        # DSATUR: most distinct neighbour colours, then highest degree, then lowest index
        best_v, best_key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in adj[v] if color[u] >= 0})
            key = (sat, len(adj[v]), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def solve(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        forbidden = {color[u] for u in adj[v]}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            color[v] = c
            if solve(colored + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return color if solve(0, 0) else None


def strong_chromatic_number(g: Hypergraph) -> ColoringResult:
    """Fewest colours such that any two vertices sharing an edge differ."""
    if g.n > MAX_COLOR_N:
        raise TooLarge(f"exact colouring is limited to {MAX_COLOR_N} vertices, got {g.n}")
    adj = [set(nb) for nb in g.neighbors]
    lower = max(1, len(_max_clique(adj)))
    for k in range(lower, g.n + 1):
        col = _k_color(adj, k)
        if col is not None:
            return ColoringResult(k, tuple(col))
    raise AssertionError("an n-colouring always exists")


def is_proper_coloring(g: Hypergraph, assignment) -> bool:
    return all(assignment[i] != assignment[j] for i in range(g.n) for j in g.neighbors[i])
