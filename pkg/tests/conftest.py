"""Shared fixtures: pinned example graphs and the small-order corpus."""

from __future__ import annotations

import pytest

import msdkit as mk

# Seven-vertex MSD used as the worked example throughout the tests.
# Three cycles, (0,1,2,3,4), (0,1,2,6) and (1,2,3,5), share the arc
# (1, 2); vertices 4, 5 and 6 are its linear vertices, each one a
# single-vertex external chain.
MSD7_ARCS = [(6, 0), (0, 1), (1, 2), (2, 6), (2, 3), (3, 5), (5, 1), (3, 4), (4, 0)]


@pytest.fixture
def msd7() -> mk.Digraph:
    return mk.build(7, MSD7_ARCS)


@pytest.fixture
def tri_chord() -> mk.Digraph:
    """Strong but not minimal: (2, 1) is transitive via 2 -> 0 -> 1."""
    return mk.build(3, [(0, 1), (1, 2), (2, 0), (2, 1)])


@pytest.fixture
def diamond_return() -> mk.Digraph:
    """MSD whose chain (4,) is maximal but not external: deleting vertex
    4 strands the diamond 0 -> {1, 2} -> 3 without a way back to 0."""
    return mk.build(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 0)])


@pytest.fixture(scope="session")
def corpus4() -> list[mk.Digraph]:
    """Every labeled MSD on up to 4 vertices (1 + 1 + 5 + 58 graphs)."""
    return [g for n in range(1, 5) for g in mk.enumerate_msds(n)]


@pytest.fixture(scope="session")
def corpus5() -> list[mk.Digraph]:
    """Every labeled MSD on up to 5 vertices (1134 graphs)."""
    return [g for n in range(1, 6) for g in mk.enumerate_msds(n)]
