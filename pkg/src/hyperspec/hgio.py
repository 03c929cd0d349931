"""The ``.hg`` text format and dense matrix export.

A file holds one header line ``p hg <n> <k>`` followed by ``k`` edge lines
``e v1 v2 ... vj`` with 1-based vertex labels. ``#`` starts a comment and blank
lines are ignored. Labels are converted to 0-based indices here and nowhere
else.
"""

from __future__ import annotations

from typing import Iterable, TextIO

import numpy as np

from .errors import HypergraphError, ParseError
from .hypergraph import Hypergraph, make_hypergraph


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", line=lineno) from None


def parse_hg(text: str) -> Hypergraph:
    n = k = None
    edges: list[list[int]] = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise ParseError("second header line", line=lineno)
            if len(tok) != 4 or tok[1] != "hg":
                raise ParseError("header must read 'p hg <n> <k>'", line=lineno)
            n, k = _ints(tok[2:], lineno)
            if n < 1 or k < 0:
                raise ParseError(f"need n >= 1 and k >= 0, got n={n}, k={k}", line=lineno)
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge line before the 'p hg' header", line=lineno)
            labels = _ints(tok[1:], lineno)
            if len(labels) < 2 or len(set(labels)) < 2:
                raise ParseError("an edge needs at least 2 distinct vertices", line=lineno)
            if len(set(labels)) != len(labels):
                raise ParseError("repeated vertex inside an edge", line=lineno)
            bad = [v for v in labels if not 1 <= v <= n]
            if bad:
                raise ParseError(f"vertex {bad[0]} outside 1..{n}", line=lineno)
            key = tuple(sorted(v - 1 for v in labels))
            if key in seen:
                raise ParseError(f"duplicate of the edge on line {seen[key]}", line=lineno)
            seen[key] = lineno
            edges.append(list(key))
        else:
            raise ParseError(f"unknown line type {tok[0]!r} (expected 'p' or 'e')", line=lineno)
    if n is None:
        raise ParseError("missing 'p hg <n> <k>' header")
    if len(edges) != k:
        raise ParseError(f"header announces {k} edges, found {len(edges)}")
    try:
        return make_hypergraph(n, edges)
    except HypergraphError as exc:
        raise ParseError(str(exc)) from exc


def read_hg(source: str | TextIO) -> Hypergraph:
    if isinstance(source, str):
        with open(source, encoding="utf-8") as fh:
            return parse_hg(fh.read())
    return parse_hg(source.read())


def format_hg(g: Hypergraph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"p hg {g.n} {g.num_edges}")
    lines += ["e " + " ".join(str(v + 1) for v in e) for e in g.edges]
    return "\n".join(lines) + "\n"


def write_hg(g: Hypergraph, path: str, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_hg(g, comment))


def format_matrix(M: np.ndarray) -> str:
    """One row per line, space separated, 17 significant digits (enough to round-trip a double)."""
    return "".join(" ".join(format(float(x), ".17g") for x in row) + "\n" for row in np.atleast_2d(M))


def parse_matrix(text: str) -> np.ndarray:
    rows: Iterable[list[float]] = ([float(t) for t in line.split()] for line in text.splitlines() if line.strip())
    return np.array(list(rows), dtype=float)
