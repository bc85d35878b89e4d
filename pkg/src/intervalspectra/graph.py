"""Immutable simple undirected graphs and the structural primitives used by
the labeling, bound and search layers.

Vertices are the integers ``0..n-1``.  Edges keep the index they were given
at construction; labelings are arrays indexed by that edge index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]
VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Raised when input would produce something other than a simple graph."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with stable edge indices.

    ``id_map`` is set on induced subgraphs: ``id_map[i]`` is the parent
    vertex that local vertex ``i`` stands for.
    """

    n: int
    edges: tuple[Edge, ...]
    id_map: Optional[tuple[int, ...]] = None
    incidence: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    neighbors: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        inc: list[list[int]] = [[] for _ in range(self.n)]
        nbr: list[list[int]] = [[] for _ in range(self.n)]
        seen: set[frozenset[int]] = set()
        for idx, (u, v) in enumerate(self.edges):
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise GraphError(f"edge {idx} ({u}, {v}): endpoint {x} out of range 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"edge {idx} ({u}, {v}): loop")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"edge {idx} ({u}, {v}): parallel edge")
            seen.add(key)
            inc[u].append(idx)
            inc[v].append(idx)
            nbr[u].append(v)
            nbr[v].append(u)
        if self.id_map is not None and len(self.id_map) != self.n:
            raise GraphError("id_map length must equal the vertex count")
        object.__setattr__(self, "incidence", tuple(map(tuple, inc)))
        object.__setattr__(self, "neighbors", tuple(map(tuple, nbr)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, x: int) -> int:
        return len(self.incidence[x])

    def degrees(self) -> list[int]:
        return [len(e) for e in self.incidence]

    def other_end(self, e: int, x: int) -> int:
        u, v = self.edges[e]
        return v if x == u else u

    def parent_ids(self, vs: Iterable[int]) -> VertexSet:
        """Translate local vertex ids to the parent graph's ids."""
        if self.id_map is None:
            return tuple(sorted(vs))
        return tuple(sorted(self.id_map[x] for x in vs))


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[VertexSet, ...]

    @property
    def count(self) -> int:
        return len(self.blocks)


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; edge ``i`` is the ``i``-th pair."""
    edges = tuple((int(u), int(v)) for u, v in pairs)
    return Graph(n, edges)


def vertex_set(g: Graph, members: Iterable[int]) -> VertexSet:
    vs = tuple(sorted(set(members)))
    for x in vs:
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range 0..{g.n - 1}")
    return vs


def _check_vertex(g: Graph, x: int) -> None:
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range 0..{g.n - 1}")


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def regularity(g: Graph) -> Optional[int]:
    """Common degree if ``g`` is regular, else ``None``."""
    if g.n == 0:
        raise GraphError("regularity of the empty graph is undefined")
    degs = set(g.degrees())
    return degs.pop() if len(degs) == 1 else None


def components(g: Graph) -> ComponentPartition:
    seen = [False] * g.n
    blocks = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors[x]:
                if not seen[y]:
                    seen[y] = True
                    block.append(y)
                    stack.append(y)
        blocks.append(tuple(sorted(block)))
    return ComponentPartition(tuple(blocks))


def induced(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``; local vertex ``i`` is ``id_map[i]`` in ``g``.

    Edges keep the relative order they had in ``g``.
    """
    members = vertex_set(g, s)
    local = {x: i for i, x in enumerate(members)}
    edges = tuple(
        (local[u], local[v]) for u, v in g.edges if u in local and v in local
    )
    root = g.id_map
    id_map = members if root is None else tuple(root[x] for x in members)
    return Graph(len(members), edges, id_map)


def _bfs(g: Graph, sources: Iterable[int]) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * g.n
    queue = deque()
    for s in sources:
        if dist[s] is None:
            dist[s] = 0
            queue.append(s)
    while queue:
        x = queue.popleft()
        for y in g.neighbors[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, x: int, y: int) -> Optional[int]:
    """Hop distance, or ``None`` when ``y`` is unreachable from ``x``."""
    _check_vertex(g, x)
    _check_vertex(g, y)
    return _bfs(g, (x,))[y]


def distance_to_set(g: Graph, x: int, s: Iterable[int]) -> Optional[int]:
    members = vertex_set(g, s)
    if not members:
        raise GraphError("distance to an empty vertex set is undefined")
    _check_vertex(g, x)
    return _bfs(g, members)[x]


def is_path_forest(g: Graph) -> bool:
    """True iff every component is a simple path (isolated vertices count)."""
    if any(d > 2 for d in g.degrees()):
        return False
    # max degree <= 2: a component is a path iff it is acyclic, i.e. m = n - c
    return g.m == g.n - components(g).count


def neighborhood(g: Graph, s: Iterable[int]) -> VertexSet:
    """All vertices within distance 1 of ``s``."""
    members = vertex_set(g, s)
    out = set(members)
    for x in members:
        out.update(g.neighbors[x])
    return tuple(sorted(out))
