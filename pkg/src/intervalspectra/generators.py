"""Graph families and the textual generator specs that name them.

Spec syntax is ``kind`` or ``kind(arg, ...)``; circulant takes its
connection set in brackets:

    cycle(5)  complete(4)  complete_bipartite(3,3)  prism(4)
    circulant(8,[1,3])  petersen  random_regular(10,3,7)

Vertex numbering per family:

* cycle(n): ``i -- i+1 mod n``, edges in order ``(0,1), (1,2), ..., (n-1,0)``.
* complete(n): edges ``(i, j)``, ``i < j``, lexicographic.
* complete_bipartite(a, b): parts ``0..a-1`` and ``a..a+b-1``; edges
  ``(i, a+j)`` lexicographic.
* prism(n): outer cycle ``0..n-1``, inner cycle ``n..2n-1``, spokes
  ``i -- n+i``; outer edges, then inner edges, then spokes.
* circulant(n, S): for each ``s`` in ``S`` (ascending), edges
  ``(i, i+s mod n)`` for ``i = 0..n-1``; ``s = n/2`` only for ``i < n/2``.
* petersen: outer 5-cycle ``0..4``, spokes ``i -- i+5``, inner pentagram
  ``5+i -- 5+(i+2 mod 5)``.
* random_regular(n, r, seed): pairing model driven by :class:`SplitMix64`;
  the stub list ``[0]*r + [1]*r + ...`` is shuffled, consecutive stubs are
  paired, and the whole attempt restarts on any loop or parallel edge.
  Edges are returned sorted with ``u < v``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Union

from .graph import Graph, build_graph
from .rng import SplitMix64

Param = Union[int, tuple[int, ...]]

MAX_PAIRING_ATTEMPTS = 100_000


class GeneratorError(ValueError):
    pass


def cycle(n: int) -> Graph:
    if n < 3:
        raise GeneratorError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GeneratorError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GeneratorError(f"complete_bipartite needs a, b >= 1, got {a}, {b}")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism(n: int) -> Graph:
    if n < 3:
        raise GeneratorError(f"prism needs n >= 3, got {n}")
    outer = [(i, (i + 1) % n) for i in range(n)]
    inner = [(n + i, n + (i + 1) % n) for i in range(n)]
    spokes = [(i, n + i) for i in range(n)]
    return build_graph(2 * n, outer + inner + spokes)


def circulant(n: int, connections: tuple[int, ...]) -> Graph:
    if n < 2:
        raise GeneratorError(f"circulant needs n >= 2, got {n}")
    conn = sorted(set(connections))
    if len(conn) != len(connections):
        raise GeneratorError(f"circulant connection set has repeats: {list(connections)}")
    if not conn:
        raise GeneratorError("circulant connection set is empty")
    for s in conn:
        if not 1 <= s <= n // 2:
            raise GeneratorError(
                f"circulant({n}) connection {s} must lie in 1..{n // 2}"
                " (0 is a loop, larger values repeat edges)"
            )
    pairs = []
    for s in conn:
        count = n // 2 if 2 * s == n else n
        pairs.extend((i, (i + s) % n) for i in range(count))
    return build_graph(n, pairs)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def random_regular(n: int, r: int, seed: int) -> Graph:
    if n < 1 or r < 0:
        raise GeneratorError(f"random_regular needs n >= 1, r >= 0, got {n}, {r}")
    if r >= n:
        raise GeneratorError(f"random_regular needs r < n, got r = {r}, n = {n}")
    if (n * r) % 2:
        raise GeneratorError(f"random_regular needs n*r even, got {n}*{r}")
    rng = SplitMix64(seed)
    for _ in range(MAX_PAIRING_ATTEMPTS):
        stubs = [v for v in range(n) for _ in range(r)]
        rng.shuffle(stubs)
        edges = set()
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                break
            e = (u, v) if u < v else (v, u)
            if e in edges:
                break
            edges.add(e)
        else:
            return build_graph(n, sorted(edges))
    raise GeneratorError(f"pairing model gave no simple graph in {MAX_PAIRING_ATTEMPTS} attempts")


# ---------------------------------------------------------------------------
# textual specs
# ---------------------------------------------------------------------------

_ARITY = {
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "prism": 1,
    "circulant": 2,
    "petersen": 0,
    "random_regular": 3,
}

_SPEC_RE = re.compile(r"^\s*([a-z_]+)\s*(?:\((.*)\))?\s*$")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    params: tuple[Param, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        parts = []
        for p in self.params:
            parts.append("[" + ",".join(map(str, p)) + "]" if isinstance(p, tuple) else str(p))
        return f"{self.kind}({','.join(parts)})"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": [list(p) if isinstance(p, tuple) else p for p in self.params]}


def _split_args(body: str) -> list[str]:
    args, depth, cur = [], 0, []
    for ch in body:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            args.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise GeneratorError(f"unbalanced brackets in {body!r}")
    tail = "".join(cur).strip()
    if tail or args:
        args.append(tail)
    return args


def _int(tok: str, text: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GeneratorError(f"bad integer {tok!r} in generator spec {text!r}") from None


def _parse_arg(tok: str, text: str) -> list[Param]:
    """One argument, possibly a range ``a..b``, expanded to its values."""
    if tok.startswith("["):
        if not tok.endswith("]"):
            raise GeneratorError(f"bad set argument {tok!r} in {text!r}")
        inner = tok[1:-1].strip()
        return [tuple(_int(t.strip(), text) for t in inner.split(",")) if inner else ()]
    if ".." in tok:
        lo, hi = tok.split("..", 1)
        lo_i, hi_i = _int(lo.strip(), text), _int(hi.strip(), text)
        if hi_i < lo_i:
            raise GeneratorError(f"empty range {tok!r} in {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [_int(tok, text)]


def parse_family(text: str) -> list[GeneratorSpec]:
    """Parse a spec whose integer arguments may be ranges ``a..b``.

    The result is the cartesian product over all ranged arguments, with the
    last argument varying fastest.
    """
    match = _SPEC_RE.match(text)
    if not match:
        raise GeneratorError(f"cannot parse generator spec {text!r}")
    kind, body = match.group(1), match.group(2)
    if kind not in _ARITY:
        raise GeneratorError(f"unknown graph family {kind!r}; known: {', '.join(sorted(_ARITY))}")
    args = _split_args(body) if body is not None else []
    if len(args) != _ARITY[kind]:
        raise GeneratorError(f"{kind} takes {_ARITY[kind]} argument(s), got {len(args)} in {text!r}")
    choices = [_parse_arg(a, text) for a in args]
    if kind == "circulant" and not isinstance(choices[1][0], tuple):
        raise GeneratorError("circulant connection set must be bracketed, e.g. circulant(8,[1,3])")
    return [GeneratorSpec(kind, tuple(combo)) for combo in product(*choices)]


def parse_spec(text: str) -> GeneratorSpec:
    specs = parse_family(text)
    if len(specs) != 1:
        raise GeneratorError(f"{text!r} names {len(specs)} graphs; expected exactly one")
    return specs[0]


def generate(spec: Union[GeneratorSpec, str]) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    p = spec.params
    if spec.kind == "cycle":
        return cycle(p[0])
    if spec.kind == "complete":
        return complete(p[0])
    if spec.kind == "complete_bipartite":
        return complete_bipartite(p[0], p[1])
    if spec.kind == "prism":
        return prism(p[0])
    if spec.kind == "circulant":
        return circulant(p[0], p[1])
    if spec.kind == "petersen":
        return petersen()
    if spec.kind == "random_regular":
        return random_regular(p[0], p[1], p[2])
    raise GeneratorError(f"unknown graph family {spec.kind!r}")
