"""Linear-vertex and cycle-length inequalities for minimal strong digraphs.

With lambda = number of linear vertices, and for a cycle C of length q
with nu linear vertices on it and mu = lambda - nu outside it, every
minimal strong digraph satisfies

    lambda >= max(indeg(v), outdeg(v))          for every vertex v
    mu     >= max(indeg(C), outdeg(C))
    mu     >= ceil((q - nu) / 2)
    lambda >= floor((q + 1) / 2)
    lambda >= floor((q + deg(u)) / 2) - 1       for every u on C
    q      <= 2n - m   and   q <= 2 * lambda

where indeg(C)/outdeg(C) count arcs entering/leaving the cycle from
outside.  All arithmetic is exact integer arithmetic; the floors and
ceilings are off-by-one sensitive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import check_msd
from .digraph import (
    ConsistencyError,
    Digraph,
    GraphError,
    VertexSeq,
    linear_vertices,
    list_simple_cycles,
)
from .transforms import cycle_degree


@dataclass(frozen=True)
class Witness:
    """One evaluated inequality, normalized to lhs >= rhs."""

    claim: str
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs >= self.rhs


@dataclass(frozen=True)
class CycleRecord:
    """Per-cycle bound data: q vertices on the cycle, nu of them linear,
    mu linear vertices elsewhere, and the outside in/out arc counts."""

    vertices: tuple[int, ...]
    q: int
    nu: int
    mu: int
    indegree: int
    outdegree: int
    vertex_degrees: tuple[int, ...]


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    linear_count: int
    max_degree: int
    upper_bound_longest_cycle: int
    cycles: tuple[CycleRecord, ...]
    partial: bool
    violations: tuple[str, ...]


def _require_msd(d: Digraph) -> None:
    if not check_msd(d).is_msd:
        raise GraphError("bound is only valid on a minimal strong digraph")


def _checked(w: Witness) -> Witness:
    if not w.ok:
        raise ConsistencyError(f"{w.claim}: {w.lhs} < {w.rhs}")
    return w


def check_degree_bound(d: Digraph) -> Witness:
    """The linear vertex count dominates every in- and out-degree."""
    if d.n < 2:
        raise GraphError("degree bound needs at least 2 vertices")
    _require_msd(d)
    lam = len(linear_vertices(d))
    top = max(max(d.degrees(v)) for v in d.vertices())
    return _checked(Witness("linear_count >= max_degree", lam, top))


def check_every_cycle_vertex_bound(d: Digraph, v: int) -> Witness:
    """Degree bound localized to a vertex that lies on every cycle."""
    _require_msd(d)
    if not (0 <= v < d.n):
        raise GraphError(f"vertex {v} outside 0..{d.n - 1}")
    cycles, _ = list_simple_cycles(d)
    for c in cycles:
        if v not in c.vertices:
            raise GraphError(f"vertex {v} misses cycle {list(c.vertices)}")
    lam = len(linear_vertices(d))
    return _checked(Witness(f"linear_count >= max_degree(v={v})", lam, max(d.degrees(v))))


def check_outside_linear_bound(d: Digraph, c: VertexSeq) -> Witness:
    """Linear vertices outside a cycle dominate the cycle's outside
    in- and out-degree."""
    _require_msd(d)
    cyc = VertexSeq.cycle(d, c.vertices if isinstance(c, VertexSeq) else c)
    lin = linear_vertices(d)
    mu = len(lin - set(cyc.vertices))
    indeg, outdeg = cycle_degree(d, cyc)
    return _checked(Witness("outside_linear >= cycle_degree", mu, max(indeg, outdeg)))


def check_halfq_bound(d: Digraph, c: VertexSeq) -> Witness:
    """lambda >= floor((q + 1) / 2) for a cycle of length q."""
    _require_msd(d)
    cyc = VertexSeq.cycle(d, c.vertices if isinstance(c, VertexSeq) else c)
    lam = len(linear_vertices(d))
    return _checked(Witness("linear_count >= floor((q+1)/2)", lam, (cyc.length + 1) // 2))


def check_combined_bound(d: Digraph, c: VertexSeq, u: int) -> Witness:
    """lambda >= floor((q + deg(u)) / 2) - 1 for a vertex u on the cycle."""
    _require_msd(d)
    cyc = VertexSeq.cycle(d, c.vertices if isinstance(c, VertexSeq) else c)
    if u not in cyc.vertices:
        raise GraphError(f"vertex {u} is not on cycle {list(cyc.vertices)}")
    lam = len(linear_vertices(d))
    du = sum(d.degrees(u))
    return _checked(Witness("linear_count >= floor((q+deg)/2)-1", lam, (cyc.length + du) // 2 - 1))


def longest_cycle_upper_bound(d: Digraph) -> int:
    """min(2 * lambda, 2n - m): no cycle of a minimal strong digraph is
    longer."""
    _require_msd(d)
    return min(2 * len(linear_vertices(d)), 2 * d.n - d.m)


def full_bound_report(d: Digraph, cycle_budget: int | None = None) -> BoundReport:
    """Evaluate every inequality over the enumerated cycles.

    Violations are collected rather than raised; a genuine minimal strong
    digraph produces none.  When the cycle budget runs out the report is
    marked partial.
    """
    _require_msd(d)
    lin = linear_vertices(d)
    lam = len(lin)
    top = max(max(d.degrees(v)) for v in d.vertices()) if d.n else 0
    upper = min(2 * lam, 2 * d.n - d.m)
    violations: list[str] = []

    def note(w: Witness, context: str) -> None:
        if not w.ok:
            violations.append(f"{context}: {w.claim} fails with {w.lhs} < {w.rhs}")

    if d.n >= 2:
        note(Witness("size >= order", d.m, d.n), "global")
        note(Witness("2(n-1) >= size", 2 * (d.n - 1), d.m), "global")
        note(Witness("linear_count >= 2", lam, 2), "global")
        note(Witness("linear_count >= max_degree", lam, top), "global")

    cycles, truncated = list_simple_cycles(d, cycle_budget)
    records: list[CycleRecord] = []
    for cyc in cycles:
        on_c = set(cyc.vertices)
        q = cyc.length
        nu = len(lin & on_c)
        mu = lam - nu
        indeg = sum(d.degrees(v)[0] - 1 for v in cyc.vertices)
        outdeg = sum(d.degrees(v)[1] - 1 for v in cyc.vertices)
        degs = tuple(sum(d.degrees(v)) for v in cyc.vertices)
        ctx = f"cycle {list(cyc.vertices)}"
        note(Witness("outside_linear >= cycle_degree", mu, max(indeg, outdeg)), ctx)
        note(Witness("outside_linear >= ceil((q-nu)/2)", mu, (q - nu + 1) // 2), ctx)
        note(Witness("linear_count >= floor((q+1)/2)", lam, (q + 1) // 2), ctx)
        for v, du in zip(cyc.vertices, degs):
            note(Witness("linear_count >= floor((q+deg)/2)-1", lam, (q + du) // 2 - 1), f"{ctx}, vertex {v}")
        note(Witness("2n-m >= q", 2 * d.n - d.m, q), ctx)
        note(Witness("2*linear_count >= q", 2 * lam, q), ctx)
        note(Witness("upper_bound >= q", upper, q), ctx)
        records.append(CycleRecord(cyc.vertices, q, nu, mu, indeg, outdeg, degs))

    return BoundReport(d.n, d.m, lam, top, upper, tuple(records), truncated, tuple(violations))
