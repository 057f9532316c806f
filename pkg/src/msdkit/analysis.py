"""Minimality analysis for strong digraphs.

A strongly connected digraph is minimal when deleting any single arc
destroys strong connectivity; equivalently, when no arc is transitive
(an arc (u, v) is transitive if some other u -> v path exists).  This
module classifies graphs, extracts chains of linear vertices, finds the
chains whose removal keeps the graph strong, and builds deterministic
ear decompositions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .digraph import (
    ConsistencyError,
    Digraph,
    GraphError,
    SeqKind,
    VertexSeq,
    _reachable_set,
    _strong_within,
    is_cut_point,
    is_strongly_connected,
    linear_vertices,
)


@dataclass(frozen=True)
class MsdReport:
    """Outcome of a full minimality check."""

    strong: bool
    transitive_arcs: tuple[tuple[int, int], ...]
    is_msd: bool
    linear_count: int
    chains: tuple[VertexSeq, ...]
    external_chains: tuple[VertexSeq, ...]


@dataclass(frozen=True)
class EarDecomposition:
    """An initial cycle plus the ears attached to grow the digraph."""

    initial: VertexSeq
    ears: tuple[tuple[int, ...], ...] = field(default_factory=tuple)


def is_transitive_arc(d: Digraph, arc: tuple[int, int]) -> bool:
    """True if the graph minus this arc still has a path from its tail
    to its head."""
    arc = tuple(arc)
    u, v = arc
    if not d.has_arc(u, v):
        raise GraphError(f"arc {arc} is not in the digraph")
    return v in _reachable_set(d, u, skip_arc=arc)


def check_msd(d: Digraph) -> MsdReport:
    """Classify a digraph: strong connectivity, transitive arcs,
    minimality, linear vertices, chains and external chains."""
    if d.n < 1:
        raise GraphError("minimality check needs at least one vertex")
    strong = is_strongly_connected(d)
    transitive: tuple[tuple[int, int], ...] = ()
    if strong:
        transitive = tuple(a for a in d.arcs if is_transitive_arc(d, a))
    msd = strong and not transitive
    lam = len(linear_vertices(d))
    chains: tuple[VertexSeq, ...] = ()
    external: tuple[VertexSeq, ...] = ()
    if strong and d.n >= 2:
        chains = tuple(maximal_chains(d))
        if msd:
            external = tuple(ch for ch in chains if _chain_is_external(d, ch))
    if msd and d.n >= 2:
        if not (d.n <= d.m <= 2 * (d.n - 1)):
            raise ConsistencyError(f"minimal strong digraph with n={d.n} has impossible size m={d.m}")
        if lam < 2:
            raise ConsistencyError(f"minimal strong digraph with n={d.n} has only {lam} linear vertices")
    return MsdReport(strong, transitive, msd, lam, chains, external)


def maximal_chains(d: Digraph) -> list[VertexSeq]:
    """Split the linear vertices into maximal directed runs.

    Each run v1 -> v2 -> ... -> vk walks arcs between linear vertices and
    cannot be extended on either side.  When the whole graph is one
    directed cycle the single run covers every vertex and is flagged with
    wraps_cycle.  Runs are returned sorted by their first vertex.
    """
    if d.n < 2:
        raise GraphError("chain extraction needs at least 2 vertices")
    if not is_strongly_connected(d):
        raise GraphError("chain extraction is defined on strongly connected digraphs")
    lin = linear_vertices(d)
    if not lin:
        return []
    if len(lin) == d.n:
        walk = [0]
        while len(walk) < d.n:
            walk.append(d.succ(walk[-1])[0])
        return [VertexSeq.chain(d, walk, wraps_cycle=True)]
    chains = []
    for v in sorted(lin):
        if d.pred(v)[0] in lin:
            continue
        run = [v]
        while d.succ(run[-1])[0] in lin:
            run.append(d.succ(run[-1])[0])
        chains.append(VertexSeq.chain(d, run))
    return chains


def _chain_is_external(d: Digraph, ch: VertexSeq) -> bool:
    """Removal of the chain (vertices plus incident arcs) leaves a
    non-empty strongly connected graph."""
    rest = frozenset(d.vertices()) - set(ch.vertices)
    if not rest:
        return False
    return _strong_within(d, rest)


def external_chains(d: Digraph) -> list[VertexSeq]:
    """Maximal chains whose removal keeps the digraph strongly connected.

    Defined for minimal strong digraphs; a directed cycle has none
    because its only chain is the whole graph.
    """
    rep = check_msd(d)
    if not rep.is_msd:
        raise GraphError("external chains are defined on minimal strong digraphs")
    return list(rep.external_chains)


def ear_decomposition(d: Digraph, seed_cycle: VertexSeq | None = None) -> EarDecomposition:
    """Grow the digraph from a cycle by repeatedly attaching ears.

    An ear is a path that starts and ends on the part already built and
    is otherwise new; single-arc ears (no internal vertex) only occur
    when the input has transitive arcs.  The construction is greedy and
    deterministic: among all unused arcs leaving the built part, attach
    the shortest ear, breaking ties by vertex sequence.  The default seed
    is a shortest cycle (deterministic breadth-first choice).
    """
    if d.n < 2:
        raise GraphError("ear decomposition needs at least 2 vertices")
    if not is_strongly_connected(d):
        raise GraphError("ear decomposition is defined on strongly connected digraphs")
    if seed_cycle is None:
        seed_cycle = _shortest_cycle(d)
    else:
        seed_cycle = VertexSeq.cycle(d, seed_cycle.vertices)

    in_part = set(seed_cycle.vertices)
    used = set(seed_cycle.arcs())
    ears: list[tuple[int, ...]] = []
    while len(used) < d.m:
        best: tuple[int, tuple[int, ...]] | None = None
        for u, w in d.arcs:
            if (u, w) in used or u not in in_part:
                continue
            ear = (u,) + _path_back_to_part(d, w, in_part)
            key = (len(ear), ear)
            if best is None or key < best:
                best = key
        if best is None:
            raise ConsistencyError("unused arcs remain but none leaves the built part")
        ear = best[1]
        ears.append(ear)
        in_part.update(ear)
        used.update(zip(ear, ear[1:]))
    return EarDecomposition(seed_cycle, tuple(ears))


def _path_back_to_part(d: Digraph, w: int, part: set[int]) -> tuple[int, ...]:
    """Shortest path from w to the built part through new vertices only
    (w itself may already lie on the part)."""
    if w in part:
        return (w,)
    parent: dict[int, int] = {w: -1}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for y in d.succ(x):
            if y in parent:
                continue
            parent[y] = x
            if y in part:
                rev = [y]
                while rev[-1] != w:
                    rev.append(parent[rev[-1]])
                return tuple(reversed(rev))
            queue.append(y)
    raise ConsistencyError(f"no way back to the built part from vertex {w}")


def _shortest_cycle(d: Digraph) -> VertexSeq:
    """A shortest cycle, chosen deterministically: smallest length, then
    lexicographically smallest canonical vertex sequence."""
    best: tuple[int, tuple[int, ...]] | None = None
    for s in range(d.n):
        dist = {s: 0}
        parent: dict[int, int] = {}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if best is not None and dist[x] + 1 >= best[0]:
                continue
            for y in d.succ(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
        for x in sorted(dist):
            if not d.has_arc(x, s) or x == s:
                continue
            walk = [x]
            while walk[-1] != s:
                walk.append(parent[walk[-1]])
            walk.reverse()
            cyc = VertexSeq.cycle(d, walk)
            key = (len(walk), cyc.vertices)
            if best is None or key < best:
                best = key
    if best is None:
        raise GraphError("digraph has no cycle")
    return VertexSeq(SeqKind.CYCLE, best[1])


def check_c2_lemma(d: Digraph) -> list[tuple[tuple[int, int], int]]:
    """For every 2-cycle, both endpoints must be linear or cut points.

    Returns the violations as ((u, v), offending_vertex) pairs; empty on
    every minimal strong digraph.
    """
    rep = check_msd(d)
    if not rep.is_msd:
        raise GraphError("the 2-cycle test is defined on minimal strong digraphs")
    lin = linear_vertices(d)
    violations: list[tuple[tuple[int, int], int]] = []
    for u, v in d.arcs:
        if u < v and d.has_arc(v, u):
            for w in (u, v):
                if w in lin:
                    continue
                if d.n >= 2 and is_cut_point(d, w):
                    continue
                violations.append(((u, v), w))
    return violations
