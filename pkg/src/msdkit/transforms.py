"""Minimality-preserving graph surgery.

Contracting a cycle or a chain of linear vertices, removing an external
chain, iterating removals down to a plain cycle, and the arc subdivision
that turns any strong digraph into a minimal one while doubling every
cycle length.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .analysis import check_msd, external_chains
from .digraph import (
    ConsistencyError,
    Digraph,
    GraphError,
    SeqKind,
    VertexSeq,
    is_strongly_connected,
)

REDUCE_POLICIES = ("lowest-id", "longest-chain-first", "avoid-set", "random")


@dataclass(frozen=True)
class ContractionResult:
    """Contracted graph plus the vertex relabelling.

    vmap sends every old vertex to its new id; the whole contracted set
    goes to ``merged``.  Survivors keep their relative order and occupy
    0..n'-2, the merged vertex is last.
    """

    result: Digraph
    vmap: dict[int, int]
    merged: int


@dataclass(frozen=True)
class ReductionResult:
    """Final cycle of a chain-removal run, in original vertex ids."""

    final: VertexSeq
    removed: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SubdivisionResult:
    """Subdivided graph: original vertices keep their ids, each arc (u, v)
    becomes u -> arc_vertex[(u, v)] -> v."""

    source: Digraph
    result: Digraph
    arc_vertex: dict[tuple[int, int], int]

    @property
    def origin(self) -> dict[int, int | tuple[int, int]]:
        """New vertex id -> original vertex id or original arc."""
        out: dict[int, int | tuple[int, int]] = {v: v for v in range(self.source.n)}
        for a, x in self.arc_vertex.items():
            out[x] = a
        return out


def _as_cycle(d: Digraph, c: VertexSeq | Sequence[int]) -> VertexSeq:
    vs = c.vertices if isinstance(c, VertexSeq) else c
    return VertexSeq.cycle(d, vs)


def _as_chain(d: Digraph, ch: VertexSeq | Sequence[int]) -> VertexSeq:
    if isinstance(ch, VertexSeq):
        return VertexSeq.chain(d, ch.vertices, ch.wraps_cycle)
    return VertexSeq.chain(d, ch)


def _quotient(d: Digraph, block: set[int]) -> ContractionResult:
    """Merge a vertex set into a single new vertex, relabelling densely.

    Parallel arcs produced by the merge are an error when the input is
    minimal (they would certify a transitive arc); otherwise they are
    silently collapsed and only strong connectivity survives.
    """
    survivors = sorted(v for v in d.vertices() if v not in block)
    merged = len(survivors)
    vmap = {old: i for i, old in enumerate(survivors)}
    for b in block:
        vmap[b] = merged
    new_arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    collided = False
    for u, v in d.arcs:
        a = (vmap[u], vmap[v])
        if a[0] == a[1]:
            continue
        if a in seen:
            collided = True
            continue
        seen.add(a)
        new_arcs.append(a)
    if collided and check_msd(d).is_msd:
        raise ConsistencyError("contracting produced a parallel arc inside a minimal strong digraph")
    return ContractionResult(Digraph(merged + 1, new_arcs), vmap, merged)


def contract_cycle(d: Digraph, c: VertexSeq | Sequence[int]) -> ContractionResult:
    """Contract a cycle of length q to one vertex.

    On a minimal strong digraph this keeps minimality and yields order
    n - q + 1 and size m - q.  On other strong digraphs arcs that become
    parallel are collapsed and only strong connectivity is guaranteed.
    """
    cyc = _as_cycle(d, c)
    return _quotient(d, set(cyc.vertices))


def cycle_degree(d: Digraph, c: VertexSeq | Sequence[int]) -> tuple[int, int]:
    """Arcs entering and leaving a cycle from outside: the degree pair of
    the merged vertex after contraction."""
    cyc = _as_cycle(d, c)
    indeg = sum(d.degrees(v)[0] - 1 for v in cyc.vertices)
    outdeg = sum(d.degrees(v)[1] - 1 for v in cyc.vertices)
    return indeg, outdeg


def contract_chain(d: Digraph, ch: VertexSeq | Sequence[int]) -> ContractionResult:
    """Contract a chain of l linear vertices to one linear vertex.

    Preserves minimality; the result has n - l + 1 vertices and
    m - l + 1 arcs.  The whole graph (l = n, a directed cycle) cannot be
    contracted this way.
    """
    chain = _as_chain(d, ch)
    if chain.length == d.n:
        raise GraphError("cannot contract a chain covering the whole digraph")
    out = _quotient(d, set(chain.vertices))
    if out.result.m != d.m - chain.length + 1:
        raise ConsistencyError("chain contraction changed the arc count unexpectedly")
    return out


def remove_external_chain(d: Digraph, ch: VertexSeq | Sequence[int]) -> Digraph:
    """Delete an external chain (vertices plus the l + 1 incident arcs)
    and relabel densely.  Raises when the removal would disconnect the
    graph, i.e. when the chain is not external."""
    chain = _as_chain(d, ch)
    survivors = sorted(set(d.vertices()) - set(chain.vertices))
    if not survivors:
        raise GraphError("removing the chain would leave an empty graph")
    vmap = {old: i for i, old in enumerate(survivors)}
    keep = set(survivors)
    new_arcs = [(vmap[u], vmap[v]) for u, v in d.arcs if u in keep and v in keep]
    out = Digraph(len(survivors), new_arcs)
    if not is_strongly_connected(out):
        raise GraphError(f"chain {list(chain.vertices)} is not external: removal breaks strong connectivity")
    return out


def reduce_to_cycle(d: Digraph, policy: str = "lowest-id",
                    avoid: Sequence[int] = (), seed: int = 0) -> ReductionResult:
    """Strip external chains until only a directed cycle remains.

    Every minimal strong digraph that is not itself a cycle has an
    external chain, so the loop always terminates.  The policy picks
    which chain goes next (chains are compared by their original vertex
    ids):

    - ``lowest-id``: lexicographically smallest chain.
    - ``longest-chain-first``: longest chain, ties to the smallest.
    - ``avoid-set``: smallest chain disjoint from ``avoid``; if every
      chain meets ``avoid``, falls back to the smallest.
    - ``random``: seeded uniform choice.

    The final cycle and the removal trace are reported in original ids;
    the final cycle is always a cycle of the input graph.
    """
    if policy not in REDUCE_POLICIES:
        raise GraphError(f"unknown policy {policy!r}, expected one of {REDUCE_POLICIES}")
    avoid_set = set(avoid)
    rng = random.Random(seed)
    cur = d
    orig = list(range(d.n))
    removed: list[tuple[int, ...]] = []
    while True:
        ext = external_chains(cur)
        if not ext:
            if cur.m != cur.n:
                raise ConsistencyError("no external chains left but the remainder is not a cycle")
            walk = [0]
            while len(walk) < cur.n:
                walk.append(cur.succ(walk[-1])[0])
            final = VertexSeq.cycle(d, [orig[v] for v in walk])
            return ReductionResult(final, tuple(removed))
        labelled = sorted((tuple(orig[v] for v in ch.vertices), ch) for ch in ext)
        if policy == "lowest-id":
            names, chain = labelled[0]
        elif policy == "longest-chain-first":
            names, chain = min(labelled, key=lambda t: (-len(t[0]), t[0]))
        elif policy == "avoid-set":
            free = [t for t in labelled if not avoid_set & set(t[0])]
            names, chain = free[0] if free else labelled[0]
        else:
            names, chain = rng.choice(labelled)
        removed.append(names)
        keep = sorted(set(range(cur.n)) - set(chain.vertices))
        cur = remove_external_chain(cur, chain)
        orig = [orig[v] for v in keep]


def subdivide(d: Digraph) -> SubdivisionResult:
    """Insert one new vertex on every arc.

    The image of a strong digraph with n vertices and m arcs is a minimal
    strong digraph with n + m vertices and 2m arcs, and its cycles are
    exactly the subdivided cycles of the source (lengths double).
    """
    if d.n < 2:
        raise GraphError("subdivision needs at least 2 vertices")
    if not is_strongly_connected(d):
        raise GraphError("subdivision is defined on strongly connected digraphs")
    arc_vertex = {a: d.n + i for i, a in enumerate(d.arcs)}
    new_arcs: list[tuple[int, int]] = []
    for a in d.arcs:
        u, v = a
        x = arc_vertex[a]
        new_arcs.append((u, x))
        new_arcs.append((x, v))
    return SubdivisionResult(d, Digraph(d.n + d.m, new_arcs), arc_vertex)


def lift_cycle(sub: SubdivisionResult, c: VertexSeq | Sequence[int]) -> VertexSeq:
    """Map a cycle of the source graph to the corresponding cycle of the
    subdivided graph (twice the length)."""
    cyc = _as_cycle(sub.source, c)
    vs = cyc.vertices
    out: list[int] = []
    for i, u in enumerate(vs):
        v = vs[(i + 1) % len(vs)]
        out.append(u)
        out.append(sub.arc_vertex[(u, v)])
    return VertexSeq.cycle(sub.result, out)


def project_cycle(sub: SubdivisionResult, c: VertexSeq | Sequence[int]) -> VertexSeq:
    """Map a cycle of the subdivided graph back to the source cycle it
    came from (half the length)."""
    cyc = _as_cycle(sub.result, c)
    keep = [v for v in cyc.vertices if v < sub.source.n]
    if 2 * len(keep) != len(cyc.vertices):
        raise ConsistencyError("subdivided cycle does not alternate original and arc vertices")
    return VertexSeq.cycle(sub.source, keep)
