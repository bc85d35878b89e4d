"""Upper bounds on the number of interval vertices of regular graphs.

For an ``r``-regular graph ``G`` (``r >= 2``) and any edge labeling, the
interval vertices induce a forest of ``k`` paths ``P_1..P_k`` and

    |V_int| <= floor((r*n - 2k) / (2(r - 1))).

The argument behind the bound is a counting one: the closed neighbourhood
subgraph ``surr(P_i)`` of each path has exactly ``(r-1)|P_i| + 1`` edges and
these edge sets are pairwise disjoint inside ``E(G)``.  :func:`check_theorem`
recomputes every one of those quantities for a concrete labeling, so a
labeling that broke the argument would be reported rather than hidden.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    components,
    induced,
    is_path_forest,
    min_degree,
    neighborhood,
    regularity,
    vertex_set,
)
from .labeling import EdgeLabeling, interval_vertices


class HypothesisError(ValueError):
    """The graph does not satisfy the hypothesis a check requires."""


@dataclass(frozen=True)
class SurrSubgraph:
    core: VertexSet
    vertices: VertexSet
    edge_indices: tuple[int, ...]


@dataclass(frozen=True)
class SurrCount:
    path_size: int
    surr_edges: int
    expected: int


@dataclass(frozen=True)
class PropositionVerdict:
    holds: bool
    v_int: VertexSet
    offending: Optional[VertexSet] = None


@dataclass(frozen=True)
class BoundReport:
    r: int
    n: int
    m: int
    v_int: VertexSet
    k: int
    bound: int
    proposition_holds: bool
    theorem_holds: bool
    surr_edge_counts: tuple[SurrCount, ...]
    # None when the proposition failed: the count is then not asserted
    surr_counts_ok: Optional[bool]
    disjointness_ok: bool
    union_ok: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.proposition_holds
            and self.theorem_holds
            and self.surr_counts_ok is True
            and self.disjointness_ok
            and self.union_ok
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["v_int"] = list(self.v_int)
        d["v_int_size"] = len(self.v_int)
        d["surr_edge_counts"] = [asdict(c) for c in self.surr_edge_counts]
        d["all_ok"] = self.all_ok
        return d


def surr(g: Graph, core: Iterable[int]) -> SurrSubgraph:
    """Closed neighbourhood of ``core`` with the edges of ``g[core]`` plus
    every edge joining an outside neighbour to ``core``."""
    core = vertex_set(g, core)
    if not core:
        raise GraphError("surr needs a nonempty core")
    inside = set(core)
    verts = neighborhood(g, core)
    edge_ids = []
    for idx, (u, v) in enumerate(g.edges):
        # both in core: edge of H; exactly one in core: the other is a neighbour
        if u in inside or v in inside:
            edge_ids.append(idx)
    return SurrSubgraph(core, verts, tuple(edge_ids))


def _require_degree(r: int) -> None:
    if r < 2:
        raise HypothesisError(f"the bound needs r >= 2, got r = {r}")


def theorem_bound(r: int, n: int, k: int) -> int:
    _require_degree(r)
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n = {n}, k = {k}")
    return (r * n - 2 * k) // (2 * (r - 1))


def corollary_bound(r: int, n: int) -> int:
    """Bound with ``k = 1``; the largest value any nonempty ``V_int`` can reach."""
    return theorem_bound(r, n, 1)


def check_proposition(g: Graph, phi: EdgeLabeling) -> PropositionVerdict:
    """Do the interval vertices induce a disjoint union of paths?"""
    if g.n == 0 or min_degree(g) < 2:
        raise HypothesisError("the path-forest property needs minimum degree >= 2")
    v_int = interval_vertices(g, phi)
    if not v_int:
        return PropositionVerdict(True, v_int)
    sub = induced(g, v_int)
    if is_path_forest(sub):
        return PropositionVerdict(True, v_int)
    for block in components(sub).blocks:
        if not is_path_forest(induced(sub, block)):
            return PropositionVerdict(False, v_int, sub.parent_ids(block))
    raise AssertionError("path-forest test and per-component test disagree")


def check_theorem(g: Graph, phi: EdgeLabeling) -> BoundReport:
    r = regularity(g) if g.n else None
    if r is None:
        raise HypothesisError("the bound applies to regular graphs only")
    _require_degree(r)
    if 2 * g.m != r * g.n:
        raise AssertionError(f"handshake failed: 2m = {2 * g.m}, r*n = {r * g.n}")

    verdict = check_proposition(g, phi)
    v_int = verdict.v_int
    if v_int:
        sub = induced(g, v_int)
        paths = [sub.parent_ids(b) for b in components(sub).blocks]
    else:
        paths = []
    k = len(paths)
    bound = theorem_bound(r, g.n, k)

    surrs = [surr(g, p) for p in paths]
    counts = tuple(
        SurrCount(len(p), len(s.edge_indices), (r - 1) * len(p) + 1)
        for p, s in zip(paths, surrs)
    )
    if verdict.holds:
        counts_ok: Optional[bool] = all(c.surr_edges == c.expected for c in counts)
    else:
        counts_ok = None
    edge_sets = [set(s.edge_indices) for s in surrs]
    disjoint = all(a.isdisjoint(b) for a, b in combinations(edge_sets, 2))
    union_ok = sum(len(s) for s in edge_sets) <= g.m

    return BoundReport(
        r=r,
        n=g.n,
        m=g.m,
        v_int=v_int,
        k=k,
        bound=bound,
        proposition_holds=verdict.holds,
        theorem_holds=len(v_int) <= bound,
        surr_edge_counts=counts,
        surr_counts_ok=counts_ok,
        disjointness_ok=disjoint,
        union_ok=union_ok,
    )
