"""Search for edge labelings with as many interval vertices as possible.

Exhaustive mode enumerates labelings by handing out labels ``1, 2, ..., m``
in order; the branching choice at depth ``t`` is which unlabelled edge gets
label ``t``.  Because labels arrive in ascending order, a vertex whose
spectrum is still open (some but not all incident edges labelled) stays an
interval candidate only while every new label lands on one of its edges.
The moment label ``t`` goes elsewhere the vertex is decided non-interval.
At most two candidates can be open at once (the endpoints of the edge that
got the previous label), so the bookkeeping per step is constant.

A branch is cut when ``n - decided_non_interval <= incumbent``.  With
symmetry reduction only labelings whose label-1 edge has a smaller index
than their label-``m`` edge are expanded; reflection ``t -> m + 1 - t``
maps the rest onto these without changing ``|V_int|``.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Optional

from .bounds import BoundReport, check_proposition, check_theorem, corollary_bound
from .generators import GeneratorError, GeneratorSpec, generate
from .graph import Graph, min_degree, regularity
from .labeling import EdgeLabeling, interval_vertices
from .rng import SplitMix64

log = logging.getLogger(__name__)

EXHAUSTIVE_EDGE_LIMIT = 12
_REFRESH_EVERY = 2048


class SearchError(ValueError):
    pass


class CounterexampleError(AssertionError):
    """A labeling violated a checked property of interval vertices.

    This would refute a published result, so it is never swallowed.
    """


@dataclass(frozen=True)
class SearchConfig:
    mode: str = "exhaustive"
    seed: int = 0
    max_moves: int = 100_000
    symmetry_reduction: bool = True
    parallel_width: int = 1
    prune: bool = True
    force: bool = False
    stop_at_bound: bool = True
    initial_temperature: float = 1.0
    cooling: float = 0.999

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "anneal"):
            raise SearchError(f"unknown search mode {self.mode!r}")
        if self.mode == "anneal" and self.max_moves < 1:
            raise SearchError("anneal mode needs max_moves >= 1")
        if self.parallel_width < 1:
            raise SearchError("parallel_width must be at least 1")


@dataclass(frozen=True)
class SearchOutcome:
    best_size: int
    witness: EdgeLabeling
    explored: int
    exhaustive: bool
    bound: Optional[int]
    nodes: int = field(default=0, compare=False)

    def to_dict(self) -> dict:
        return {
            "best_size": self.best_size,
            "witness_labels": list(self.witness.labels),
            "explored": self.explored,
            "exhaustive": self.exhaustive,
            "bound": self.bound,
        }


def _ceiling(g: Graph) -> Optional[int]:
    """Largest |V_int| the bound allows for a nonempty V_int, if it applies."""
    r = regularity(g)
    if r is None or r < 2:
        return None
    return corollary_bound(r, g.n)


def _check_preconditions(g: Graph) -> None:
    if g.n == 0 or min_degree(g) < 2:
        raise SearchError("search needs a graph with minimum degree >= 2")


def cross_check(g: Graph, witness: EdgeLabeling, best_size: int) -> Optional[BoundReport]:
    """Re-derive everything about a witness from scratch; raise on any mismatch."""
    size = len(interval_vertices(g, witness))
    if size != best_size:
        raise AssertionError(f"search reported {best_size} interval vertices, witness has {size}")
    verdict = check_proposition(g, witness)
    if not verdict.holds:
        raise CounterexampleError(
            f"interval vertices {verdict.v_int} do not induce a path forest "
            f"(component {verdict.offending}); labeling {list(witness.labels)}"
        )
    r = regularity(g)
    if r is None or r < 2:
        return None
    report = check_theorem(g, witness)
    if not report.all_ok:
        raise CounterexampleError(f"bound check failed for labeling {list(witness.labels)}: {report.to_dict()}")
    return report


# ---------------------------------------------------------------------------
# exhaustive enumeration
# ---------------------------------------------------------------------------


class _Enumerator:
    def __init__(self, g: Graph, prune: bool, symmetry: bool, ceiling: Optional[int], shared=None) -> None:
        self.n = g.n
        self.m = g.m
        self.ends = g.edges
        self.deg = g.degrees()
        self.prune = prune
        self.symmetry = symmetry and g.m > 1
        self.ceiling = ceiling
        self.shared = shared
        self.cnt = [0] * g.n
        self.dead = [False] * g.n
        self.label_of = [0] * g.m
        self.best = -1
        self.witness: Optional[tuple[int, ...]] = None
        self.explored = 0
        self.nodes = 0
        self.stop = False
        self.first = -1
        self.hi_left = 0
        self._tick = 0

    def run_shard(self, first_edge: int) -> None:
        if self.stop:
            return
        self.first = first_edge
        self.hi_left = self.m - 1 - first_edge
        if self.symmetry and self.hi_left == 0:
            return
        self._assign(first_edge, 1, (), 0)

    def _incumbent(self) -> int:
        if self.shared is not None:
            self._tick += 1
            if self._tick >= _REFRESH_EVERY:
                self._tick = 0
                other = self.shared.value
                if other > self.best:
                    self.best = other
                if self.ceiling is not None and self.best >= self.ceiling:
                    self.stop = True
        return self.best

    def _extend(self, t: int, open_vs: tuple[int, ...], ndead: int) -> None:
        if t > self.m:
            self._leaf(ndead)
            return
        label_of = self.label_of
        for e in range(self.m):
            if label_of[e]:
                continue
            self._assign(e, t, open_vs, ndead)
            if self.stop:
                return

    def _assign(self, e: int, t: int, open_vs: tuple[int, ...], ndead: int) -> None:
        u, v = self.ends[e]
        killed = [x for x in open_vs if x != u and x != v]
        nd = ndead + len(killed)
        if self.prune and self.n - nd <= self._incumbent():
            return
        high = self.symmetry and e > self.first
        if high:
            self.hi_left -= 1
        if self.symmetry and t < self.m and self.hi_left == 0:
            # label m would land on an edge below the label-1 edge
            if high:
                self.hi_left += 1
            return

        self.nodes += 1
        dead, cnt, deg = self.dead, self.cnt, self.deg
        for x in killed:
            dead[x] = True
        self.label_of[e] = t
        cnt[u] += 1
        cnt[v] += 1
        new_open = tuple(x for x in (u, v) if not dead[x] and cnt[x] < deg[x])

        self._extend(t + 1, new_open, nd)

        cnt[u] -= 1
        cnt[v] -= 1
        self.label_of[e] = 0
        for x in killed:
            dead[x] = False
        if high:
            self.hi_left += 1

    def _leaf(self, ndead: int) -> None:
        self.explored += 1
        size = self.n - ndead
        if size > self.best:
            self.best = size
            self.witness = tuple(self.label_of)
            if self.shared is not None:
                with self.shared.get_lock():
                    if size > self.shared.value:
                        self.shared.value = size
            if self.ceiling is not None and size >= self.ceiling:
                self.stop = True


_worker_shared = None


def _init_worker(shared) -> None:
    global _worker_shared
    _worker_shared = shared


def _run_shards(g: Graph, shards: list[int], prune: bool, symmetry: bool, ceiling: Optional[int]):
    en = _Enumerator(g, prune, symmetry, ceiling, _worker_shared)
    for s in shards:
        en.run_shard(s)
        if en.stop:
            break
    return en.best, en.witness, en.explored, en.nodes, (shards[0] if shards else -1)


def exhaustive_max(g: Graph, cfg: SearchConfig = SearchConfig()) -> SearchOutcome:
    _check_preconditions(g)
    if g.m > EXHAUSTIVE_EDGE_LIMIT and not cfg.force:
        raise SearchError(
            f"{g.m} edges is too many for exhaustive search (limit {EXHAUSTIVE_EDGE_LIMIT}); force to override"
        )
    ceiling = _ceiling(g) if cfg.stop_at_bound else None
    width = min(cfg.parallel_width, g.m)

    if width == 1:
        en = _Enumerator(g, cfg.prune, cfg.symmetry_reduction, ceiling)
        for first in range(g.m):
            en.run_shard(first)
            if en.stop:
                break
        best, witness, explored, nodes = en.best, en.witness, en.explored, en.nodes
    else:
        ctx = get_context("fork")
        shared = ctx.Value("i", -1)
        buckets = [list(range(w, g.m, width)) for w in range(width)]
        with ProcessPoolExecutor(width, mp_context=ctx, initializer=_init_worker, initargs=(shared,)) as pool:
            futures = [
                pool.submit(_run_shards, g, b, cfg.prune, cfg.symmetry_reduction, ceiling) for b in buckets
            ]
            results = [f.result() for f in futures]
        explored = sum(r[2] for r in results)
        nodes = sum(r[3] for r in results)
        best = max(r[0] for r in results)
        witness = min((r[4], r[1]) for r in results if r[0] == best and r[1] is not None)[1]

    if witness is None:  # pragma: no cover - every graph has at least one labeling
        raise AssertionError("exhaustive search finished without a witness")
    phi = EdgeLabeling(witness)
    report = cross_check(g, phi, best)
    log.debug("exhaustive search: best %d, %d leaves, %d nodes", best, explored, nodes)
    return SearchOutcome(best, phi, explored, True, report.bound if report else None, nodes)


def naive_max(g: Graph) -> tuple[int, EdgeLabeling]:
    """Reference maximum over every permutation, with no pruning at all."""
    from itertools import permutations

    best, witness = -1, None
    for labels in permutations(range(1, g.m + 1)):
        phi = EdgeLabeling(labels)
        size = len(interval_vertices(g, phi))
        if size > best:
            best, witness = size, phi
    return best, witness


# ---------------------------------------------------------------------------
# simulated annealing
# ---------------------------------------------------------------------------


def _is_interval_at(inc: tuple[int, ...], labels: list[int]) -> bool:
    lo = hi = labels[inc[0]]
    for e in inc[1:]:
        lab = labels[e]
        if lab < lo:
            lo = lab
        elif lab > hi:
            hi = lab
    return hi - lo + 1 == len(inc)


def anneal_max(g: Graph, cfg: SearchConfig = SearchConfig(mode="anneal")) -> SearchOutcome:
    """Label-transposition annealing; returns the best labeling ever visited.

    Deterministic for a given ``(seed, max_moves)``.  A move that lowers
    ``|V_int|`` by ``d`` is accepted with probability ``exp(-d / T)``;
    ``T`` starts at ``initial_temperature`` and is multiplied by
    ``cooling`` after every move.
    """
    _check_preconditions(g)
    if g.m < 2:
        raise SearchError("annealing needs at least two edges")
    if cfg.max_moves < 1:
        raise SearchError("annealing needs a positive move budget")
    ceiling = _ceiling(g) if cfg.stop_at_bound else None
    rng = SplitMix64(cfg.seed)
    m = g.m
    inc = g.incidence
    ends = g.edges

    labels = [0] * m
    for e, lab in enumerate(rng.permutation(m)):
        labels[e] = lab
    status = [_is_interval_at(inc[x], labels) for x in range(g.n)]
    current = sum(status)
    best, best_labels = current, tuple(labels)
    temp = cfg.initial_temperature
    moves = 0

    while moves < cfg.max_moves and not (ceiling is not None and best >= ceiling):
        moves += 1
        a = rng.below(m)
        b = rng.below(m - 1)
        if b >= a:
            b += 1
        labels[a], labels[b] = labels[b], labels[a]
        touched = set(ends[a]) | set(ends[b])
        fresh = {x: _is_interval_at(inc[x], labels) for x in touched}
        delta = sum(fresh.values()) - sum(status[x] for x in touched)
        if delta >= 0 or (temp > 0.0 and rng.random() < math.exp(delta / temp)):
            for x, ok in fresh.items():
                status[x] = ok
            current += delta
            if current > best:
                best, best_labels = current, tuple(labels)
        else:
            labels[a], labels[b] = labels[b], labels[a]
        temp *= cfg.cooling

    phi = EdgeLabeling(best_labels)
    report = cross_check(g, phi, best)
    return SearchOutcome(best, phi, moves, False, report.bound if report else None, moves)


def maximize(g: Graph, cfg: SearchConfig) -> SearchOutcome:
    if cfg.mode == "exhaustive":
        return exhaustive_max(g, cfg)
    return anneal_max(g, cfg)


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    spec: GeneratorSpec
    outcome: Optional[SearchOutcome] = None
    report: Optional[BoundReport] = None
    error: Optional[str] = None

    def to_dict(self) -> dict:
        d: dict = {"graph": str(self.spec), "params": self.spec.to_dict()["params"]}
        if self.error is not None:
            d["error"] = self.error
            return d
        d["outcome"] = self.outcome.to_dict()
        d["report"] = self.report.to_dict() if self.report is not None else None
        return d


def sweep(family: list[GeneratorSpec], cfg: SearchConfig) -> list[SweepRow]:
    """Maximize over every member of ``family``; per-row errors are recorded.

    A :class:`CounterexampleError` is not a per-row error and propagates.
    """
    rows = []
    for spec in family:
        try:
            g = generate(spec)
            outcome = maximize(g, cfg)
            r = regularity(g)
            report = check_theorem(g, outcome.witness) if r is not None and r >= 2 else None
        except (SearchError, GeneratorError, ValueError) as exc:
            if isinstance(exc, CounterexampleError):  # pragma: no cover - not a ValueError
                raise
            rows.append(SweepRow(spec, error=f"{type(exc).__name__}: {exc}"))
            continue
        rows.append(SweepRow(spec, outcome, report))
    return rows
