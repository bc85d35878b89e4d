from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from intervalspectra.bounds import (
    HypothesisError,
    check_proposition,
    check_theorem,
    corollary_bound,
    surr,
    theorem_bound,
)
from intervalspectra.generators import complete, cycle, petersen, prism, random_regular
from intervalspectra.graph import GraphError, build_graph, distance_to_set
from intervalspectra.labeling import EdgeLabeling, make_labeling

# K4 edge order from complete(4): (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
K4_TIGHT = (3, 1, 2, 4, 5, 6)


def _surr_by_definition(g, core):
    """Vertices within distance 1 of core; E(G[core]) plus edges from those
    neighbours into core."""
    core = set(core)
    verts = {x for x in range(g.n) if distance_to_set(g, x, core) in (0, 1)}
    outside = verts - core
    edges = set()
    for idx, (u, v) in enumerate(g.edges):
        if u in core and v in core:
            edges.add(idx)
        elif (u in outside and v in core) or (v in outside and u in core):
            edges.add(idx)
    return tuple(sorted(verts)), tuple(sorted(edges))


class TestSurr:
    def test_c5_single_vertex(self):
        s = surr(cycle(5), [0])
        assert s.vertices == (0, 1, 4)
        assert {cycle(5).edges[e] for e in s.edge_indices} == {(4, 0), (0, 1)}
        assert len(s.edge_indices) == (2 - 1) * 1 + 1

    def test_k4_edge(self):
        s = surr(complete(4), [0, 1])
        assert s.vertices == (0, 1, 2, 3)
        assert len(s.edge_indices) == 5 == (3 - 1) * 2 + 1
        # (2,3) joins two outside vertices, so it is excluded
        assert 5 not in s.edge_indices

    def test_whole_connected_graph(self):
        g = petersen()
        s = surr(g, range(g.n))
        assert s.vertices == tuple(range(10))
        assert s.edge_indices == tuple(range(15))

    def test_empty_core(self):
        with pytest.raises(GraphError):
            surr(cycle(4), [])

    @given(st.integers(0, 30), st.data())
    def test_matches_definition(self, seed, data):
        g = random_regular(10, 3, seed)
        core = data.draw(st.sets(st.integers(0, 9), min_size=1))
        s = surr(g, core)
        assert (s.vertices, s.edge_indices) == _surr_by_definition(g, core)
        assert set(s.vertices) >= core


class TestBoundArithmetic:
    @pytest.mark.parametrize(
        "r, n, k, expected",
        [(3, 4, 1, 2), (2, 5, 1, 4), (3, 10, 0, 7), (3, 10, 1, 7), (3, 10, 2, 6), (4, 9, 3, 5)],
    )
    def test_values(self, r, n, k, expected):
        assert theorem_bound(r, n, k) == expected

    def test_corollary_values(self):
        assert corollary_bound(3, 4) == 2
        assert corollary_bound(3, 6) == 4
        assert corollary_bound(3, 10) == 7

    @given(st.integers(3, 200))
    def test_corollary_on_cycles(self, n):
        assert corollary_bound(2, n) == n - 1

    def test_rejects_small_degree(self):
        with pytest.raises(HypothesisError):
            theorem_bound(1, 4, 1)
        with pytest.raises(HypothesisError):
            corollary_bound(0, 4)

    @given(st.integers(2, 20), st.integers(1, 200), st.integers(0, 50))
    def test_monotone_and_specialises(self, r, n, k):
        assert theorem_bound(r, n, k + 1) <= theorem_bound(r, n, k)
        assert theorem_bound(r, n + 1, k) >= theorem_bound(r, n, k)
        assert theorem_bound(r, n, 1) == corollary_bound(r, n)
        num, den = r * n - 2 * k, 2 * (r - 1)
        b = theorem_bound(r, n, k)
        assert b * den <= num < (b + 1) * den


class TestProposition:
    def test_triangle(self, c3):
        v = check_proposition(c3, make_labeling(c3, [1, 2, 3]))
        assert v.holds and v.v_int == (1, 2)

    def test_c4(self):
        g = cycle(4)
        v = check_proposition(g, make_labeling(g, [1, 2, 3, 4]))
        assert v.holds and len(v.v_int) == 3

    def test_empty_v_int(self):
        g = cycle(4)
        # (0,1)=1 (1,2)=3 (2,3)=2 (3,0)=4: spectra {1,4} {1,3} {2,3} {2,4}
        v = check_proposition(g, make_labeling(g, [1, 3, 2, 4]))
        assert v.v_int == (2,)
        g6 = cycle(6)
        v = check_proposition(g6, make_labeling(g6, [1, 3, 5, 2, 4, 6]))
        assert v.v_int == () and v.holds

    def test_needs_min_degree_two(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        with pytest.raises(HypothesisError):
            check_proposition(g, make_labeling(g, [1, 2]))


class TestTheorem:
    def test_k4_tight(self):
        rep = check_theorem(complete(4), EdgeLabeling(K4_TIGHT))
        assert rep.v_int == (0, 1)
        assert rep.k == 1 and rep.bound == 2
        assert [(c.path_size, c.surr_edges, c.expected) for c in rep.surr_edge_counts] == [(2, 5, 5)]
        assert rep.all_ok

    def test_c5_tight(self):
        rep = check_theorem(cycle(5), EdgeLabeling((1, 2, 3, 4, 5)))
        assert len(rep.v_int) == 4 and rep.k == 1 and rep.bound == 4
        assert rep.theorem_holds

    def test_case_one(self):
        rep = check_theorem(cycle(6), EdgeLabeling((1, 3, 5, 2, 4, 6)))
        assert rep.v_int == () and rep.k == 0
        assert rep.bound == theorem_bound(2, 6, 0) == 6
        assert rep.surr_edge_counts == () and rep.all_ok

    def test_k4_exhaustive(self):
        g = complete(4)
        best = 0
        for labels in permutations(range(1, 7)):
            rep = check_theorem(g, EdgeLabeling(labels))
            assert rep.all_ok, labels
            best = max(best, len(rep.v_int))
        assert best == 2

    def test_rejects_irregular(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        with pytest.raises(HypothesisError):
            check_theorem(g, make_labeling(g, [1, 2, 3, 4, 5]))

    @given(st.sampled_from([cycle(7), prism(4), petersen(), random_regular(12, 4, 3)]), st.data())
    def test_report_invariants(self, g, data):
        phi = EdgeLabeling(tuple(data.draw(st.permutations(range(1, g.m + 1)))))
        rep = check_theorem(g, phi)
        assert rep.theorem_holds == (len(rep.v_int) <= rep.bound)
        assert rep.k == len(rep.surr_edge_counts)
        assert rep.m * 2 == rep.r * rep.n
        assert rep.all_ok
        assert rep.to_dict()["v_int_size"] == len(rep.v_int)


def test_broken_proposition_is_flagged_not_asserted(monkeypatch):
    """Feed the checker an impossible interval set to exercise the failure path."""
    import intervalspectra.bounds as bounds

    g = complete(4)
    monkeypatch.setattr(bounds, "interval_vertices", lambda g, phi: (0, 1, 2))
    verdict = check_proposition(g, EdgeLabeling(K4_TIGHT))
    assert not verdict.holds and verdict.offending == (0, 1, 2)
    rep = check_theorem(g, EdgeLabeling(K4_TIGHT))
    assert not rep.proposition_holds
    assert rep.surr_counts_ok is None
    assert not rep.theorem_holds
    assert not rep.all_ok
