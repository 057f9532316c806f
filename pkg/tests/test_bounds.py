"""Linear-vertex inequalities and the composite cycle-length bound."""

from __future__ import annotations

import pytest

import msdkit as mk


def test_witness_ok():
    assert mk.Witness("a >= b", 3, 2).ok
    assert mk.Witness("a >= b", 2, 2).ok
    assert not mk.Witness("a >= b", 1, 2).ok


def test_degree_bound(msd7):
    w = mk.check_degree_bound(msd7)
    assert (w.lhs, w.rhs) == (3, 2) and w.ok
    shared_center = mk.build(3, [(0, 1), (1, 0), (0, 2), (2, 0)])
    w = mk.check_degree_bound(shared_center)
    assert (w.lhs, w.rhs) == (2, 2) and w.ok


def test_degree_bound_rejections(tri_chord):
    with pytest.raises(mk.GraphError, match="minimal"):
        mk.check_degree_bound(tri_chord)
    with pytest.raises(mk.GraphError, match="at least 2"):
        mk.check_degree_bound(mk.build(1, []))


def test_every_cycle_vertex_bound(msd7):
    # vertices 1 and 2 lie on all three cycles
    for v in (1, 2):
        w = mk.check_every_cycle_vertex_bound(msd7, v)
        assert w.lhs == 3 and w.ok
    with pytest.raises(mk.GraphError, match="misses cycle"):
        mk.check_every_cycle_vertex_bound(msd7, 0)
    with pytest.raises(mk.GraphError, match="outside"):
        mk.check_every_cycle_vertex_bound(msd7, 9)


def test_outside_linear_bound(msd7):
    for vs, pair in [((0, 1, 2, 3, 4), (2, 2)),
                     ((0, 1, 2, 6), (2, 1)),
                     ((1, 2, 3, 5), (1, 2))]:
        w = mk.check_outside_linear_bound(msd7, mk.VertexSeq.cycle(msd7, vs))
        assert w.lhs == 2
        assert w.rhs == max(pair)
        assert w.ok


def test_halfq_bound(msd7):
    c5 = mk.VertexSeq.cycle(msd7, [0, 1, 2, 3, 4])
    w = mk.check_halfq_bound(msd7, c5)
    assert (w.lhs, w.rhs) == (3, 3) and w.ok
    c4 = mk.VertexSeq.cycle(msd7, [0, 1, 2, 6])
    w = mk.check_halfq_bound(msd7, c4)
    assert (w.lhs, w.rhs) == (3, 2) and w.ok


def test_combined_bound(msd7):
    c5 = mk.VertexSeq.cycle(msd7, [0, 1, 2, 3, 4])
    w = mk.check_combined_bound(msd7, c5, 3)
    assert (w.lhs, w.rhs) == (3, 3) and w.ok
    w = mk.check_combined_bound(msd7, c5, 4)
    assert (w.lhs, w.rhs) == (3, 2) and w.ok
    with pytest.raises(mk.GraphError, match="not on cycle"):
        mk.check_combined_bound(msd7, c5, 6)


def test_longest_cycle_upper_bound(msd7, tri_chord):
    assert mk.longest_cycle_upper_bound(msd7) == 5
    assert mk.longest_cycle_upper_bound(mk.directed_cycle(4)) == 4
    assert mk.longest_cycle_upper_bound(mk.directed_cycle(9)) == 9
    with pytest.raises(mk.GraphError, match="minimal"):
        mk.longest_cycle_upper_bound(tri_chord)


def test_full_bound_report(msd7):
    rep = mk.full_bound_report(msd7)
    assert (rep.n, rep.m, rep.linear_count, rep.max_degree) == (7, 9, 3, 2)
    assert rep.upper_bound_longest_cycle == 5
    assert not rep.partial
    assert rep.violations == ()
    assert [r.vertices for r in rep.cycles] == [(0, 1, 2, 3, 4), (0, 1, 2, 6), (1, 2, 3, 5)]
    c5, c4a, c4b = rep.cycles
    assert (c5.q, c5.nu, c5.mu, c5.indegree, c5.outdegree) == (5, 1, 2, 2, 2)
    assert c5.vertex_degrees == (3, 3, 3, 3, 2)
    assert (c4a.nu, c4a.mu, c4a.indegree, c4a.outdegree) == (1, 2, 2, 1)
    assert (c4b.indegree, c4b.outdegree) == (1, 2)
    for r in rep.cycles:
        assert r.mu == rep.linear_count - r.nu
        assert r.q <= rep.upper_bound_longest_cycle


def test_full_bound_report_budget(msd7):
    rep = mk.full_bound_report(msd7, cycle_budget=2)
    assert rep.partial
    assert len(rep.cycles) == 2
    assert rep.violations == ()


def test_full_bound_report_trivial():
    rep = mk.full_bound_report(mk.build(1, []))
    assert rep.cycles == () and rep.violations == ()
    rep = mk.full_bound_report(mk.directed_cycle(2))
    assert rep.upper_bound_longest_cycle == 2
    assert rep.cycles[0].q == 2 and rep.cycles[0].nu == 2 and rep.cycles[0].mu == 0


def test_no_violations_on_small_corpus(corpus4):
    for d in corpus4:
        rep = mk.full_bound_report(d)
        assert rep.violations == ()
        for r in rep.cycles:
            assert r.q <= rep.upper_bound_longest_cycle
