"""Immutable simple digraphs plus the reachability and cycle primitives
everything else is built on.

Vertices are the integers ``0 .. n-1``.  Arcs are ordered pairs with no
loops and no duplicates.  A :class:`Digraph` is immutable and hashable,
so graphs can be collected in sets and compared structurally.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Input violates a documented precondition (bad arc, wrong kind of graph)."""


class ConsistencyError(RuntimeError):
    """An invariant that should be unbreakable failed; indicates a bug."""


class SeqKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    CHAIN = "chain"


class Digraph:
    """Simple directed graph on ``0 .. n-1`` with validated, sorted arcs."""

    __slots__ = ("n", "arcs", "_succ", "_pred", "_arcset")

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        arc_list = sorted(tuple(a) for a in arcs)
        seen: set[tuple[int, int]] = set()
        succ: list[list[int]] = [[] for _ in range(n)]
        pred: list[list[int]] = [[] for _ in range(n)]
        for a in arc_list:
            if len(a) != 2:
                raise GraphError(f"arc {a!r} is not a pair")
            u, v = a
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc {a} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop arc {a} is not allowed")
            if a in seen:
                raise GraphError(f"duplicate arc {a}")
            seen.add(a)
            succ[u].append(v)
            pred[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", tuple(arc_list))
        object.__setattr__(self, "_succ", tuple(tuple(s) for s in succ))
        object.__setattr__(self, "_pred", tuple(tuple(sorted(p)) for p in pred))
        object.__setattr__(self, "_arcset", frozenset(seen))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Digraph is immutable")

    # ---- structure queries ----

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def succ(self, v: int) -> tuple[int, ...]:
        """Out-neighbours of v in ascending order."""
        return self._succ[v]

    def pred(self, v: int) -> tuple[int, ...]:
        """In-neighbours of v in ascending order."""
        return self._pred[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcset

    def degrees(self, v: int) -> tuple[int, int]:
        """(in-degree, out-degree) of v."""
        return len(self._pred[v]), len(self._succ[v])

    # ---- value semantics ----

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"


def build(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Validate and build a digraph, rejecting loops, duplicates and
    out-of-range endpoints with the offending arc named in the error."""
    return Digraph(n, arcs)


@dataclass(frozen=True)
class VertexSeq:
    """A path, cycle or chain given as a vertex sequence.

    Instances are plain data; the classmethod constructors validate the
    sequence against a host digraph.  Cycles are stored in canonical
    rotation (minimum vertex first).  ``wraps_cycle`` marks the degenerate
    chain that covers a whole directed cycle.
    """

    kind: SeqKind
    vertices: tuple[int, ...]
    wraps_cycle: bool = False

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Consecutive arc pairs, including the closing arc for cycles."""
        vs = self.vertices
        for i in range(len(vs) - 1):
            yield vs[i], vs[i + 1]
        if self.kind is SeqKind.CYCLE and vs:
            yield vs[-1], vs[0]

    @classmethod
    def path(cls, d: Digraph, vertices: Sequence[int]) -> "VertexSeq":
        vs = _checked_walk(d, vertices, "path")
        return cls(SeqKind.PATH, vs)

    @classmethod
    def cycle(cls, d: Digraph, vertices: Sequence[int]) -> "VertexSeq":
        vs = _checked_walk(d, vertices, "cycle")
        if len(vs) < 2:
            raise GraphError(f"cycle needs at least 2 vertices, got {list(vs)}")
        if not d.has_arc(vs[-1], vs[0]):
            raise GraphError(f"missing closing arc {(vs[-1], vs[0])} for cycle {list(vs)}")
        k = vs.index(min(vs))
        return cls(SeqKind.CYCLE, vs[k:] + vs[:k])

    @classmethod
    def chain(cls, d: Digraph, vertices: Sequence[int], wraps_cycle: bool = False) -> "VertexSeq":
        vs = _checked_walk(d, vertices, "chain")
        for v in vs:
            if d.degrees(v) != (1, 1):
                raise GraphError(f"chain vertex {v} has degrees {d.degrees(v)}, expected (1, 1)")
        return cls(SeqKind.CHAIN, vs, wraps_cycle)


def _checked_walk(d: Digraph, vertices: Sequence[int], what: str) -> tuple[int, ...]:
    vs = tuple(vertices)
    if not vs:
        raise GraphError(f"empty {what}")
    if len(set(vs)) != len(vs):
        raise GraphError(f"{what} {list(vs)} repeats a vertex")
    for v in vs:
        if not (0 <= v < d.n):
            raise GraphError(f"{what} vertex {v} outside 0..{d.n - 1}")
    for i in range(len(vs) - 1):
        if not d.has_arc(vs[i], vs[i + 1]):
            raise GraphError(f"missing arc {(vs[i], vs[i + 1])} along {what} {list(vs)}")
    return vs


# ---- reachability ----

def _reachable_set(d: Digraph, start: int, allowed: frozenset[int] | set[int] | None = None,
                   forward: bool = True, skip_arc: tuple[int, int] | None = None) -> set[int]:
    """Vertices reachable from start, optionally restricted to an allowed
    set and optionally ignoring one arc."""
    step = d.succ if forward else d.pred
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in step(x):
            if skip_arc is not None:
                a = (x, y) if forward else (y, x)
                if a == skip_arc:
                    continue
            if y in seen or (allowed is not None and y not in allowed):
                continue
            seen.add(y)
            queue.append(y)
    return seen


def _strong_within(d: Digraph, allowed: frozenset[int] | set[int]) -> bool:
    """True if the subgraph induced by the allowed vertex set is strongly
    connected.  Singleton sets count as strong."""
    if not allowed:
        raise GraphError("empty vertex set")
    start = min(allowed)
    k = len(allowed)
    if k == 1:
        return True
    if len(_reachable_set(d, start, allowed, forward=True)) != k:
        return False
    return len(_reachable_set(d, start, allowed, forward=False)) == k


def is_strongly_connected(d: Digraph) -> bool:
    """True if every vertex reaches every other one."""
    if d.n < 1:
        raise GraphError("strong connectivity needs at least one vertex")
    if d.n == 1:
        return True
    if len(_reachable_set(d, 0)) != d.n:
        return False
    return len(_reachable_set(d, 0, forward=False)) == d.n


def linear_vertices(d: Digraph) -> frozenset[int]:
    """Vertices with in-degree and out-degree both 1."""
    return frozenset(v for v in d.vertices() if d.degrees(v) == (1, 1))


def is_cut_point(d: Digraph, v: int) -> bool:
    """True if deleting v (and its incident arcs) destroys strong
    connectivity of the remaining graph."""
    if d.n < 2:
        raise GraphError("cut point test needs at least 2 vertices")
    if not is_strongly_connected(d):
        raise GraphError("cut point test is defined on strongly connected digraphs")
    if not (0 <= v < d.n):
        raise GraphError(f"vertex {v} outside 0..{d.n - 1}")
    rest = frozenset(d.vertices()) - {v}
    return not _strong_within(d, rest)


# ---- simple cycle enumeration ----

def enumerate_simple_cycles(d: Digraph) -> Iterator[VertexSeq]:
    """Yield every simple directed cycle exactly once.

    Cycles are emitted in canonical form (minimum vertex first) and in
    lexicographic order of that form: ascending start vertex, then
    ascending continuation at every branch.  Uses the blocked-set search
    of Johnson restricted, per start vertex s, to the strong component
    of s among vertices >= s.
    """
    for s in range(d.n):
        comp = _scc_containing(d, s)
        if len(comp) < 2:
            continue
        adj = {v: tuple(w for w in d.succ(v) if w in comp) for v in comp}
        for cycle in _blocked_search(s, adj):
            yield VertexSeq(SeqKind.CYCLE, cycle)


def list_simple_cycles(d: Digraph, max_count: int | None = None) -> tuple[list[VertexSeq], bool]:
    """Collect simple cycles up to an optional budget.

    Returns (cycles, truncated); truncated is True when the budget was hit
    while more cycles remained.
    """
    if max_count is not None and max_count < 0:
        raise GraphError(f"cycle budget must be non-negative, got {max_count}")
    out: list[VertexSeq] = []
    for c in enumerate_simple_cycles(d):
        if max_count is not None and len(out) >= max_count:
            return out, True
        out.append(c)
    return out, False


def _scc_containing(d: Digraph, s: int) -> set[int]:
    """Strongly connected component of s in the subgraph induced by
    vertices >= s.  Iterative Tarjan."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    counter = 0
    result: set[int] = set()

    work: list[tuple[int, int]] = [(s, 0)]
    while work:
        v, pi = work[-1]
        if pi == 0:
            index[v] = low[v] = counter
            counter += 1
            stack.append(v)
            on_stack.add(v)
        advanced = False
        succ = [w for w in d.succ(v) if w >= s]
        while pi < len(succ):
            w = succ[pi]
            pi += 1
            if w not in index:
                work[-1] = (v, pi)
                work.append((w, 0))
                advanced = True
                break
            if w in on_stack:
                low[v] = min(low[v], index[w])
        if advanced:
            continue
        work.pop()
        if low[v] == index[v]:
            comp = set()
            while True:
                w = stack.pop()
                on_stack.discard(w)
                comp.add(w)
                if w == v:
                    break
            if s in comp:
                result = comp
        if work:
            p, _ = work[-1]
            low[p] = min(low[p], low[v])
    return result


def _blocked_search(s: int, adj: dict[int, tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    """Johnson's circuit search from s inside one strong component."""
    path = [s]
    blocked = {s}
    closed: set[int] = set()
    blocked_by: dict[int, set[int]] = {v: set() for v in adj}
    frames: list[tuple[int, Iterator[int]]] = [(s, iter(adj[s]))]

    def unblock(v: int) -> None:
        todo = [v]
        while todo:
            x = todo.pop()
            if x in blocked:
                blocked.discard(x)
                todo.extend(blocked_by[x])
                blocked_by[x].clear()

    while frames:
        node, it = frames[-1]
        descended = False
        for w in it:
            if w == s:
                yield tuple(path)
                closed.update(path)
            elif w not in blocked:
                path.append(w)
                closed.discard(w)
                blocked.add(w)
                frames.append((w, iter(adj[w])))
                descended = True
                break
        if descended:
            continue
        if node in closed:
            unblock(node)
        else:
            for w in adj[node]:
                blocked_by[w].add(node)
        frames.pop()
        path.pop()
