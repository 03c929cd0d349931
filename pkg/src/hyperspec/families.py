"""Named hypergraph families and operations that build new hypergraphs."""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .errors import CardinalityMismatch, InvalidCardinality, NotUniform, SizeOverflow
from .hypergraph import Hypergraph, make_hypergraph

#: Largest vertex count any generator will produce.
MAX_VERTICES = 100_000

# 1-based, as usually printed.
FANO_LINES = ((1, 2, 3), (1, 4, 7), (1, 5, 6), (2, 4, 6), (2, 5, 7), (3, 4, 5), (3, 6, 7))


def _budget(n: int) -> None:
    if n > MAX_VERTICES:
        raise SizeOverflow(f"{n} vertices exceeds the budget of {MAX_VERTICES}")


def complete_uniform(n: int, m: int) -> Hypergraph:
    """K^m_n: every m-subset of n vertices is an edge."""
    if not 2 <= m <= n:
        raise InvalidCardinality(f"complete m-uniform hypergraph needs 2 <= m <= n, got m={m}, n={n}")
    _budget(n)
    return make_hypergraph(n, combinations(range(n), m))


def complete_bipartite_uniform(n1: int, n2: int, m: int) -> Hypergraph:
    """K^m_{n1,n2} on parts ``0..n1-1`` and ``n1..n1+n2-1``."""
    if m < 2 or n1 < 1 or n2 < 1 or n1 + n2 < m:
        raise InvalidCardinality(f"K^{m}_{{{n1},{n2}}} is not defined")
    _budget(n1 + n2)
    edges = [e for e in combinations(range(n1 + n2), m) if e[0] < n1 <= e[-1]]
    return make_hypergraph(n1 + n2, edges)


def cube_hypergraph(n: int, m: int) -> Hypergraph:
    """Q(n, m) on ``{0..m-1}^n``; a vertex tuple maps to its base-m value, first coordinate most significant."""
    if n < 1 or m < 2:
        raise InvalidCardinality(f"Q(n,m) needs n >= 1 and m >= 2, got n={n}, m={m}")
    if m**n > MAX_VERTICES:
        raise SizeOverflow(f"Q({n},{m}) has {m**n} vertices, budget is {MAX_VERTICES}")
    weights = [m ** (n - 1 - k) for k in range(n)]
    edges = []
    for axis in range(n):
        others = [k for k in range(n) if k != axis]
        for rest in product(range(m), repeat=n - 1):
            base = sum(weights[k] * x for k, x in zip(others, rest))
            edges.append([base + weights[axis] * t for t in range(m)])
    return make_hypergraph(m**n, edges)


def fano_plane() -> Hypergraph:
    return make_hypergraph(7, [[v - 1 for v in line] for line in FANO_LINES])


def bowtie() -> Hypergraph:
    """Two triples sharing vertex 2."""
    return make_hypergraph(5, [(0, 1, 2), (2, 3, 4)])


def uniform_chain(length: int, m: int = 3) -> Hypergraph:
    """``length`` m-edges where consecutive edges share exactly one vertex."""
    if length < 1 or m < 2:
        raise InvalidCardinality("a chain needs at least one edge of size >= 2")
    step = m - 1
    return make_hypergraph(length * step + 1, [range(k * step, k * step + m) for k in range(length)])


def empty_uniform(n: int) -> Hypergraph:
    """Edgeless hypergraph; it counts as m-uniform for every m in :func:`join`."""
    _budget(n)
    return make_hypergraph(n, [])


def cartesian_product(g1: Hypergraph, g2: Hypergraph) -> Hypergraph:
    """``g1 x g2`` with vertex ``(a, x)`` stored at index ``a * g2.n + x``."""
    _budget(g1.n * g2.n)
    n2 = g2.n
    edges = [[a * n2 + x for x in e] for a in range(g1.n) for e in g2.edges]
    edges += [[a * n2 + x for a in e] for e in g1.edges for x in range(n2)]
    return make_hypergraph(g1.n * n2, edges)


def _uniformity(g: Hypergraph, m: int | None) -> int:
    if g.num_edges == 0:
        if m is None:
            raise NotUniform("an edgeless hypergraph needs an explicit m")
        return m
    if g.uniform_m is None:
        raise NotUniform("hypergraph has edges of different cardinalities")
    if m is not None and m != g.uniform_m:
        raise CardinalityMismatch(f"expected {m}-uniform, got {g.uniform_m}-uniform")
    return g.uniform_m


def uniform_complement(g: Hypergraph, m: int | None = None) -> Hypergraph:
    """All m-subsets that are not edges of ``g``; ``m`` is required only for edgeless input."""
    m = _uniformity(g, m)
    if m > g.n:
        raise InvalidCardinality(f"no {m}-subsets of {g.n} vertices")
    have = set(g.edges)
    return make_hypergraph(g.n, (e for e in combinations(range(g.n), m) if e not in have))


def join(g1: Hypergraph, g2: Hypergraph, m: int | None = None) -> Hypergraph:
    """``g1 + g2``: both edge sets plus every m-subset meeting both vertex sets.

    This equals the complement of the disjoint union of the two complements.
    """
    ms = {m} if m is not None else set()
    for g in (g1, g2):
        if g.num_edges:
            if g.uniform_m is None:
                raise NotUniform("join needs uniform hypergraphs")
            ms.add(g.uniform_m)
    if not ms:
        raise NotUniform("cannot infer m for a join of edgeless hypergraphs")
    if len(ms) > 1:
        raise CardinalityMismatch(f"join needs a common cardinality, got {sorted(ms)}")
    (m,) = ms
    n1, n = g1.n, g1.n + g2.n
    if m > n:
        raise InvalidCardinality(f"no {m}-subsets of {n} vertices")
    _budget(n)
    edges = list(g1.edges) + [[v + n1 for v in e] for e in g2.edges]
    edges += [e for e in combinations(range(n), m) if e[0] < n1 <= e[-1]]
    return make_hypergraph(n, edges)


def disjoint_union(g1: Hypergraph, g2: Hypergraph) -> Hypergraph:
    return make_hypergraph(g1.n + g2.n, list(g1.edges) + [[v + g1.n for v in e] for e in g2.edges])


def random_uniform(n: int, m: int, num_edges: int, seed: int, connected: bool = False) -> Hypergraph:
    """Seeded sampler: ``num_edges`` distinct m-subsets drawn uniformly without replacement.

    With ``connected=True`` draws are repeated from the same generator until the
    result is connected; pick ``num_edges`` large enough for that to be likely.
    """
    all_edges = list(combinations(range(n), m))
    if num_edges > len(all_edges):
        raise InvalidCardinality(f"only {len(all_edges)} distinct {m}-subsets of {n} vertices")
    rng = np.random.default_rng(seed)
    for _ in range(10_000):
        pick = rng.choice(len(all_edges), size=num_edges, replace=False)
        g = make_hypergraph(n, (all_edges[k] for k in sorted(pick)))
        if not connected or g.is_connected():
            return g
    raise InvalidCardinality(f"could not draw a connected hypergraph with {num_edges} edges")


def audit_suite(seed: int = 0, random_count: int = 50) -> list[tuple[str, Hypergraph]]:
    """The named test families plus ``random_count`` seeded connected 3-uniform hypergraphs on 5..12 vertices."""
    suite = [(f"K3_{n}", complete_uniform(n, 3)) for n in range(3, 9)]
    suite += [(f"K3_{n1},{n2}", complete_bipartite_uniform(n1, n2, 3)) for n1, n2 in ((1, 2), (2, 2), (2, 3), (3, 3))]
    suite += [("Q(2,3)", cube_hypergraph(2, 3)), ("bowtie", bowtie())]
    suite += [(f"chain{k}", uniform_chain(k, 3)) for k in range(1, 5)]
    rng = np.random.default_rng(seed)
    for k in range(random_count):
        n = int(rng.integers(5, 13))
        edges = int(rng.integers((n + 1) // 2, 2 * n + 1))
        sub = int(rng.integers(0, 2**31))
        suite.append((f"random{k}", random_uniform(n, 3, edges, sub, connected=True)))
    return suite
