"""Shared fixtures and independent reference implementations.

The helpers here deliberately avoid the package's own algorithms: distances
come from networkx, eigenvalues from numpy's LAPACK driver, cuts and
colourings from plain itertools enumeration, transport from scipy's LP solver.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from hyperspec import make_hypergraph
from hyperspec.families import bowtie, complete_uniform


@pytest.fixture
def k33():
    return complete_uniform(3, 3)


@pytest.fixture
def k34():
    return complete_uniform(4, 3)


@pytest.fixture
def tie():
    return bowtie()


def dense_adjacency(g) -> np.ndarray:
    """Entry-by-entry adjacency straight from the weight definition."""
    A = np.zeros((g.n, g.n))
    for i in range(g.n):
        for j in range(g.n):
            if i != j:
                A[i, j] = sum(1.0 / (len(e) - 1) for e in g.edges if i in e and j in e)
    return A


def two_section(g) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    for e in g.edges:
        G.add_edges_from(combinations(e, 2))
    return G


def brute_cheeger(g, measure="counting") -> float:
    deg = [sum(v in e for e in g.edges) for v in range(g.n)]
    best = np.inf
    for k in range(1, g.n):
        for S in combinations(range(g.n), k):
            s = set(S)
            cut = sum(1 for e in g.edges if 0 < len(s & set(e)) < len(e))
            if measure == "counting":
                den = min(k, g.n - k)
            else:
                vs = sum(deg[v] for v in s)
                den = min(vs, sum(deg) - vs)
            best = min(best, cut / den)
    return best


def brute_chromatic(g) -> int:
    G = two_section(g)
    for k in range(1, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if all(colors[a] != colors[b] for a, b in G.edges):
                return k
    raise AssertionError


def brute_weak_connectivity(g) -> int:
    for k in range(1, g.n - 1):
        for W in combinations(range(g.n), k):
            keep = [v for v in range(g.n) if v not in W]
            G = nx.Graph()
            G.add_nodes_from(keep)
            for e in g.edges:
                rest = [v for v in e if v not in W]
                if len(rest) >= 2:
                    G.add_edges_from(combinations(rest, 2))
            if len(keep) >= 2 and not nx.is_connected(G):
                return k
    raise AssertionError("no cut")


@st.composite
def hypergraphs(draw, min_n=2, max_n=8, max_edges=10, uniform=None, connected=False):
    n = draw(st.integers(min_n, max_n))
    sizes = st.just(uniform) if uniform else st.integers(2, min(4, n))
    if uniform and uniform > n:
        n = uniform
    if n < 2:
        return make_hypergraph(n, [])
    raw = draw(st.lists(
        sizes.flatmap(lambda m: st.lists(st.integers(0, n - 1), min_size=m, max_size=m, unique=True)),
        min_size=1, max_size=max_edges,
    ))
    edges = {tuple(sorted(e)) for e in raw}
    if connected:
        # chain consecutive vertices so the result is connected
        m = uniform or 2
        for start in range(0, n - 1, m - 1):
            block = tuple(range(start, min(start + m, n)))
            if len(block) < m:
                block = tuple(range(n - m, n))
            edges.add(block)
    return make_hypergraph(n, sorted(edges))


def pytest_terminal_summary(terminalreporter):
    lines = [value for key in ("passed", "failed") for rep in terminalreporter.stats.get(key, [])
             for name, value in getattr(rep, "user_properties", []) if name == "acceptance"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
