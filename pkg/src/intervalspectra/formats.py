"""Text formats.

Edge list::

    n m
    u v        # m lines, 0-based, edge index = line order

Labeling: one line of ``m`` integers; position is the edge index, value
the label.  Blank lines and ``#`` comments are ignored in both formats.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, GraphError
from .labeling import EdgeLabeling, LabelingError, make_labeling


class ParseError(ValueError):
    def __init__(self, line: int, message: str, source: str = "<input>") -> None:
        super().__init__(f"{source}:{line}: {message}")
        self.line = line


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if toks:
            yield lineno, toks


def _ints(lineno: int, toks: list[str], source: str) -> list[int]:
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(toks)!r}", source) from None


def parse_edge_list(text: str, source: str = "<input>") -> Graph:
    lines = iter(_content_lines(text))
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header line 'n m'", source) from None
    header = _ints(lineno, toks, source)
    if len(header) != 2:
        raise ParseError(lineno, "header must be 'n m'", source)
    n, m = header
    if n < 0 or m < 0:
        raise ParseError(lineno, "n and m must be non-negative", source)

    edges: list[tuple[int, int]] = []
    seen: dict[frozenset[int], int] = {}
    for lineno, toks in lines:
        pair = _ints(lineno, toks, source)
        if len(pair) != 2:
            raise ParseError(lineno, "edge line must be 'u v'", source)
        u, v = pair
        if len(edges) == m:
            raise ParseError(lineno, f"more than the declared {m} edges", source)
        for x in (u, v):
            if not 0 <= x < n:
                raise ParseError(lineno, f"endpoint {x} out of range 0..{n - 1}", source)
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}", source)
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(lineno, f"parallel edge ({u}, {v}); first seen on line {seen[key]}", source)
        seen[key] = lineno
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(lineno, f"declared {m} edges, found {len(edges)}", source)
    try:
        return Graph(n, tuple(edges))
    except GraphError as exc:  # pragma: no cover - every invariant is checked above
        raise ParseError(lineno, str(exc), source) from None


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_labeling(text: str, g: Graph, source: str = "<input>") -> EdgeLabeling:
    rows = list(_content_lines(text.replace(",", " ")))
    if not rows:
        raise ParseError(1, "empty labeling", source)
    if len(rows) > 1:
        raise ParseError(rows[1][0], "labeling must be a single line", source)
    lineno, toks = rows[0]
    try:
        return make_labeling(g, _ints(lineno, toks, source))
    except LabelingError as exc:
        raise ParseError(lineno, str(exc), source) from None


def emit_labeling(phi: EdgeLabeling) -> str:
    return " ".join(map(str, phi.labels)) + "\n"
