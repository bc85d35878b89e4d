"""Edge labelings, vertex spectra and interval vertices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, VertexSet

Spectrum = tuple[int, ...]


class LabelingError(ValueError):
    pass


class SpectrumUndefinedError(LabelingError):
    """An isolated vertex has an empty spectrum, which is never an interval."""


@dataclass(frozen=True)
class EdgeLabeling:
    """``labels[e]`` is the label (1-based) of edge index ``e``."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.labels)
        seen = [False] * (m + 1)
        for e, lab in enumerate(self.labels):
            if not 1 <= lab <= m:
                raise LabelingError(f"edge {e}: label {lab} out of range 1..{m}")
            if seen[lab]:
                raise LabelingError(f"edge {e}: label {lab} repeated (labels must be distinct)")
            seen[lab] = True

    @property
    def m(self) -> int:
        return len(self.labels)


def make_labeling(g: Graph, labels: Iterable[int]) -> EdgeLabeling:
    labels = tuple(int(x) for x in labels)
    if len(labels) != g.m:
        raise LabelingError(f"expected {g.m} labels, got {len(labels)}")
    return EdgeLabeling(labels)


def spectrum(g: Graph, phi: EdgeLabeling, x: int) -> Spectrum:
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range 0..{g.n - 1}")
    return tuple(sorted(phi.labels[e] for e in g.incidence[x]))


def is_interval(s: Spectrum) -> bool:
    if not s:
        raise SpectrumUndefinedError("an interval is nonempty; got an empty spectrum")
    # s is sorted and duplicate-free
    return s[-1] - s[0] + 1 == len(s)


def interval_vertices(g: Graph, phi: EdgeLabeling) -> VertexSet:
    if phi.m != g.m:
        raise LabelingError(f"labeling has {phi.m} labels but graph has {g.m} edges")
    labels = phi.labels
    out = []
    for x, inc in enumerate(g.incidence):
        if not inc:
            raise SpectrumUndefinedError(f"vertex {x} is isolated; its spectrum is undefined")
        lo = hi = labels[inc[0]]
        for e in inc[1:]:
            lab = labels[e]
            if lab < lo:
                lo = lab
            elif lab > hi:
                hi = lab
        if hi - lo + 1 == len(inc):
            out.append(x)
    return tuple(out)


def reflect(phi: EdgeLabeling) -> EdgeLabeling:
    top = phi.m + 1
    return EdgeLabeling(tuple(top - lab for lab in phi.labels))


def labeling_report(g: Graph, phi: EdgeLabeling) -> dict:
    v_int = interval_vertices(g, phi)
    return {"labels": list(phi.labels), "v_int": list(v_int), "v_int_size": len(v_int)}
