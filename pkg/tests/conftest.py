from __future__ import annotations

import pytest
from hypothesis import strategies as st

from intervalspectra.graph import Graph, build_graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8, min_degree: int = 0) -> Graph:
    """Arbitrary simple graphs, optionally topped up to a minimum degree."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if min_degree:
        deg = [0] * n
        for u, v in chosen:
            deg[u] += 1
            deg[v] += 1
        have = set(chosen)
        for u in range(n):
            for v in range(n):
                if deg[u] >= min_degree:
                    break
                e = (min(u, v), max(u, v))
                if u != v and e not in have:
                    have.add(e)
                    chosen.append(e)
                    deg[u] += 1
                    deg[v] += 1
    order = draw(st.permutations(chosen)) if chosen else []
    return build_graph(n, order)


@pytest.fixture
def c3() -> Graph:
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])
