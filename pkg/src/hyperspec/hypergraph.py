"""Immutable hypergraph model, structural queries and hypergraph metrics.

Vertices are the integers ``0 .. n-1``. An edge is any vertex set of
cardinality at least two; singleton edges are rejected because every
connectivity matrix weights an edge by ``1 / (|e| - 1)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    EdgeTooSmall,
    EmptySubset,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class StructuralSummary:
    rank: int
    corank: int
    degrees: np.ndarray
    codegrees: np.ndarray
    is_uniform: bool
    uniform_m: int | None


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A finite hypergraph on ``n`` vertices.

    Build instances with :func:`make_hypergraph`; the constructor trusts its
    arguments. Edges are kept as sorted tuples, in sorted order, so two
    hypergraphs with the same edge set compare equal.
    """

    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={len(self.edges)})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        d = np.zeros(self.n, dtype=np.int64)
        for e in self.edges:
            d[list(e)] += 1
        d.flags.writeable = False
        return d

    @cached_property
    def codegrees(self) -> np.ndarray:
        """``d_ij``: number of edges containing both ``i`` and ``j`` (zero diagonal)."""
        c = np.zeros((self.n, self.n), dtype=np.int64)
        for e in self.edges:
            idx = np.asarray(e)
            c[np.ix_(idx, idx)] += 1
        np.fill_diagonal(c, 0)
        c.flags.writeable = False
        return c

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            for v in e:
                nb[v].update(e)
        for v in range(self.n):
            nb[v].discard(v)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Indices of the edges containing each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for k, e in enumerate(self.edges):
            for v in e:
                inc[v].append(k)
        return tuple(tuple(x) for x in inc)

    @property
    def rank(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    @property
    def corank(self) -> int:
        return min((len(e) for e in self.edges), default=0)

    @property
    def uniform_m(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def is_uniform(self) -> bool:
        return self.uniform_m is not None

    def is_regular(self) -> bool:
        return self.n > 0 and bool(np.all(self.degrees == self.degrees[0]))

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.neighbors[i]

    def has_nonadjacent_pair(self) -> bool:
        return any(len(nb) < self.n - 1 for nb in self.neighbors)

    def summary(self) -> StructuralSummary:
        return StructuralSummary(
            rank=self.rank,
            corank=self.corank,
            degrees=self.degrees,
            codegrees=self.codegrees,
            is_uniform=self.is_uniform(),
            uniform_m=self.uniform_m,
        )

    @cached_property
    def components(self) -> tuple[frozenset[int], ...]:
        return tuple(connected_components(self))

    def is_connected(self) -> bool:
        return len(self.components) == 1

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        """All-pairs hop distances; ``-1`` marks unreachable pairs."""
        D = np.full((self.n, self.n), -1, dtype=np.int64)
        for s in range(self.n):
            D[s] = _bfs(self, [s])
        D.flags.writeable = False
        return D


def make_hypergraph(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate ``edges`` over vertices ``0..n-1`` and build a Hypergraph."""
    n = int(n)
    if n < 1:
        raise VertexOutOfRange(f"a hypergraph needs at least one vertex, got n={n}")
    seen: set[Edge] = set()
    canon: list[Edge] = []
    for k, e in enumerate(edges):
        members = sorted(set(int(v) for v in e))
        if len(members) < 2:
            raise EdgeTooSmall(f"edge {k} has {len(members)} vertices; at least 2 are required")
        if members[0] < 0 or members[-1] >= n:
            raise VertexOutOfRange(f"edge {k} uses a vertex outside 0..{n - 1}")
        t = tuple(members)
        if t in seen:
            raise DuplicateEdge(f"edge {k} {t} appears more than once")
        seen.add(t)
        canon.append(t)
    canon.sort()
    return Hypergraph(n, tuple(canon))


def _bfs(g: Hypergraph, sources: Sequence[int]) -> np.ndarray:
    dist = np.full(g.n, -1, dtype=np.int64)
    q: deque[int] = deque()
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            q.append(s)
    while q:
        v = q.popleft()
        for w in g.neighbors[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def _check_vertex(g: Hypergraph, v: int) -> None:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")


def distance(g: Hypergraph, i: int, j: int) -> int | None:
    """Length of a shortest ``i``-``j`` path, or None when unreachable."""
    _check_vertex(g, i)
    _check_vertex(g, j)
    d = int(g.distance_matrix[i, j])
    return None if d < 0 else d


def diameter(g: Hypergraph) -> int:
    if not g.is_connected():
        raise Disconnected("diameter is undefined for a disconnected hypergraph")
    return int(g.distance_matrix.max())


def set_distance(g: Hypergraph, s1: Iterable[int], s2: Iterable[int]) -> int | None:
    a, b = sorted(set(s1)), sorted(set(s2))
    if not a or not b:
        raise EmptySubset("set distance needs two nonempty vertex sets")
    for v in a + b:
        _check_vertex(g, v)
    dist = _bfs(g, a)[b]
    reach = dist[dist >= 0]
    return int(reach.min()) if reach.size else None


def _as_mask(g: Hypergraph, s: Iterable[int]) -> np.ndarray:
    mask = np.zeros(g.n, dtype=bool)
    for v in s:
        _check_vertex(g, v)
        mask[v] = True
    return mask


def edge_boundary(g: Hypergraph, s: Iterable[int]) -> list[Edge]:
    """Edges with at least one vertex inside ``s`` and one outside."""
    mask = _as_mask(g, s)
    out = []
    for e in g.edges:
        inside = int(mask[list(e)].sum())
        if 0 < inside < len(e):
            out.append(e)
    return out


def vertex_boundary(g: Hypergraph, s: Iterable[int]) -> frozenset[int]:
    mask = _as_mask(g, s)
    out: set[int] = set()
    for v in np.flatnonzero(mask):
        out.update(w for w in g.neighbors[v] if not mask[w])
    return frozenset(out)


def volume(g: Hypergraph, s: Iterable[int]) -> int:
    return int(g.degrees[_as_mask(g, s)].sum())


def connected_components(g: Hypergraph) -> list[frozenset[int]]:
    """Components of the adjacency relation, ordered by smallest member."""
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for v in range(g.n):
        if seen[v]:
            continue
        reach = _bfs(g, [v]) >= 0
        seen |= reach
        comps.append(frozenset(int(x) for x in np.flatnonzero(reach)))
    return comps
