"""Digraph construction, reachability and cycle enumeration."""

from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import msdkit as mk
from msdkit.digraph import SeqKind


@st.composite
def digraphs(draw, max_n: int = 6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return mk.build(n, sorted(arcs))


def test_build_sorts_and_counts(msd7):
    assert msd7.n == 7
    assert msd7.m == 9
    assert msd7.arcs == tuple(sorted(msd7.arcs))
    assert msd7.vertices() == range(7)


def test_build_rejects_loop():
    with pytest.raises(mk.GraphError, match=r"loop arc \(1, 1\)"):
        mk.build(3, [(0, 1), (1, 1)])


def test_build_rejects_duplicate():
    with pytest.raises(mk.GraphError, match=r"duplicate arc \(0, 1\)"):
        mk.build(3, [(0, 1), (0, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(mk.GraphError, match=r"arc \(0, 3\)"):
        mk.build(3, [(0, 3)])
    with pytest.raises(mk.GraphError, match="non-negative"):
        mk.build(-1, [])


def test_build_rejects_non_pair():
    with pytest.raises(mk.GraphError, match="not a pair"):
        mk.build(3, [(0, 1, 2)])


def test_digraph_is_immutable(msd7):
    with pytest.raises(AttributeError):
        msd7.n = 3


def test_value_semantics():
    a = mk.build(3, [(0, 1), (1, 2), (2, 0)])
    b = mk.build(3, [(2, 0), (0, 1), (1, 2)])
    c = mk.build(3, [(0, 1), (1, 0)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != c
    assert len({a, b, c}) == 2


def test_accessors(msd7):
    assert msd7.succ(2) == (3, 6)
    assert msd7.pred(1) == (0, 5)
    assert msd7.has_arc(6, 0)
    assert not msd7.has_arc(0, 6)
    assert msd7.degrees(2) == (1, 2)
    assert msd7.degrees(1) == (2, 1)
    assert msd7.degrees(4) == (1, 1)


def test_strong_connectivity(msd7):
    assert mk.is_strongly_connected(msd7)
    assert mk.is_strongly_connected(mk.build(1, []))
    assert not mk.is_strongly_connected(mk.build(3, [(0, 1), (1, 2)]))
    assert not mk.is_strongly_connected(mk.build(2, []))
    with pytest.raises(mk.GraphError):
        mk.is_strongly_connected(mk.build(0, []))


def test_linear_vertices(msd7):
    assert mk.linear_vertices(msd7) == frozenset({4, 5, 6})
    assert mk.linear_vertices(mk.directed_cycle(4)) == frozenset({0, 1, 2, 3})
    assert mk.linear_vertices(mk.build(1, [])) == frozenset()


def test_cut_points(msd7):
    assert {v for v in msd7.vertices() if mk.is_cut_point(msd7, v)} == {0, 1, 2, 3}
    c4 = mk.directed_cycle(4)
    assert all(mk.is_cut_point(c4, v) for v in c4.vertices())
    c2 = mk.directed_cycle(2)
    assert not any(mk.is_cut_point(c2, v) for v in c2.vertices())


def test_cut_point_preconditions(msd7):
    with pytest.raises(mk.GraphError, match="outside"):
        mk.is_cut_point(msd7, 7)
    with pytest.raises(mk.GraphError, match="strongly connected"):
        mk.is_cut_point(mk.build(3, [(0, 1), (1, 2)]), 0)
    with pytest.raises(mk.GraphError, match="at least 2"):
        mk.is_cut_point(mk.build(1, []), 0)


def test_vertex_seq_cycle_canonical(msd7):
    c = mk.VertexSeq.cycle(msd7, [2, 6, 0, 1])
    assert c.vertices == (0, 1, 2, 6)
    assert c.kind is SeqKind.CYCLE
    assert c.length == 4
    assert list(c.arcs()) == [(0, 1), (1, 2), (2, 6), (6, 0)]


def test_vertex_seq_path_and_chain(msd7):
    p = mk.VertexSeq.path(msd7, [0, 1, 2])
    assert list(p.arcs()) == [(0, 1), (1, 2)]
    ch = mk.VertexSeq.chain(msd7, [4])
    assert ch.kind is SeqKind.CHAIN
    assert not ch.wraps_cycle


def test_vertex_seq_validation(msd7):
    with pytest.raises(mk.GraphError, match="missing arc"):
        mk.VertexSeq.path(msd7, [0, 2])
    with pytest.raises(mk.GraphError, match="missing closing arc"):
        mk.VertexSeq.cycle(msd7, [0, 1, 2, 3])
    with pytest.raises(mk.GraphError, match="repeats"):
        mk.VertexSeq.path(msd7, [1, 2, 6, 0, 1])
    with pytest.raises(mk.GraphError, match="empty"):
        mk.VertexSeq.path(msd7, [])
    with pytest.raises(mk.GraphError, match="at least 2"):
        mk.VertexSeq.cycle(msd7, [0])
    with pytest.raises(mk.GraphError, match="degrees"):
        mk.VertexSeq.chain(msd7, [3])


def test_cycle_enumeration_frozen(msd7):
    got = [c.vertices for c in mk.enumerate_simple_cycles(msd7)]
    assert got == [(0, 1, 2, 3, 4), (0, 1, 2, 6), (1, 2, 3, 5)]


def test_cycle_enumeration_complete_triangle():
    k3 = mk.build(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)])
    got = [c.vertices for c in mk.enumerate_simple_cycles(k3)]
    assert got == [(0, 1), (0, 1, 2), (0, 2), (0, 2, 1), (1, 2)]


def test_cycle_enumeration_acyclic():
    dag = mk.build(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert list(mk.enumerate_simple_cycles(dag)) == []


def test_list_simple_cycles_budget(msd7):
    cycles, truncated = mk.list_simple_cycles(msd7)
    assert len(cycles) == 3 and not truncated
    cycles, truncated = mk.list_simple_cycles(msd7, max_count=2)
    assert len(cycles) == 2 and truncated
    cycles, truncated = mk.list_simple_cycles(msd7, max_count=3)
    assert len(cycles) == 3 and not truncated
    with pytest.raises(mk.GraphError, match="budget"):
        mk.list_simple_cycles(msd7, max_count=-1)


def _nx_canonical_cycles(d: mk.Digraph) -> set[tuple[int, ...]]:
    g = nx.DiGraph()
    g.add_nodes_from(d.vertices())
    g.add_edges_from(d.arcs)
    out = set()
    for cyc in nx.simple_cycles(g):
        k = cyc.index(min(cyc))
        out.add(tuple(cyc[k:] + cyc[:k]))
    return out


@settings(max_examples=120, deadline=None)
@given(digraphs())
def test_cycles_match_networkx(d):
    got = [c.vertices for c in mk.enumerate_simple_cycles(d)]
    assert len(got) == len(set(got))
    assert got == sorted(got)
    assert set(got) == _nx_canonical_cycles(d)


@settings(max_examples=120, deadline=None)
@given(digraphs())
def test_strong_connectivity_matches_networkx(d):
    g = nx.DiGraph()
    g.add_nodes_from(d.vertices())
    g.add_edges_from(d.arcs)
    assert mk.is_strongly_connected(d) == nx.is_strongly_connected(g)
