"""Exact longest simple directed cycle.

Two solvers with identical answers: a brute-force pass over the full
cycle enumeration, and a branch-and-bound DFS.  On minimal strong
digraphs the DFS is capped by the composite bound min(2*lambda, 2n - m)
and stops the moment the bound is attained; extensions whose optimistic
value (path length plus vertices still reachable from the head) cannot
beat the incumbent are cut.

Both solvers break ties the same way, returning the lexicographically
least canonical cycle among the maxima, so results are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import check_msd
from .digraph import Digraph, GraphError, SeqKind, VertexSeq, list_simple_cycles


@dataclass(frozen=True)
class SearchResult:
    """Best cycle found plus effort accounting.

    early_exit is set when the search stopped because the incumbent
    reached bound_used.  msd_bounds tells whether the composite bound of
    a minimal strong digraph was available (otherwise the trivial bound
    n was used)."""

    cycle: VertexSeq | None
    length: int
    nodes_explored: int
    bound_used: int
    early_exit: bool
    msd_bounds: bool


def longest_cycle_bruteforce(d: Digraph, max_cycles: int | None = None) -> SearchResult:
    """Enumerate every simple cycle and take the longest.

    nodes_explored counts enumerated cycles.  Raises when the optional
    enumeration budget is exceeded.
    """
    cycles, truncated = list_simple_cycles(d, max_cycles)
    if truncated:
        raise GraphError(f"cycle enumeration exceeded the budget of {max_cycles}")
    best: VertexSeq | None = None
    for c in cycles:
        if best is None or c.length > best.length:
            best = c
    return SearchResult(best, best.length if best else 0, len(cycles), d.n, False, False)


def longest_cycle_search(d: Digraph, prune: bool = True) -> SearchResult:
    """Branch-and-bound DFS for the longest cycle.

    Start vertices ascend and every cycle is explored with its minimum
    vertex first, so discovery order is the lexicographic order of
    canonical forms and the first incumbent of maximal length is the
    lexicographically least witness.  With prune=False the same tree is
    walked exhaustively, which the pruned run never exceeds in explored
    nodes.
    """
    if d.n < 1:
        raise GraphError("cycle search needs at least one vertex")
    rep = check_msd(d)
    msd_bounds = rep.is_msd and d.n >= 2
    bound = min(2 * rep.linear_count, 2 * d.n - d.m) if msd_bounds else d.n

    best_len = 0
    best: tuple[int, ...] | None = None
    nodes = 0
    stop = False
    on_path: set[int] = set()
    path: list[int] = []

    def optimistic(head: int, s: int) -> int:
        seen: set[int] = set()
        stack = [w for w in d.succ(head) if w > s and w not in on_path]
        seen.update(stack)
        while stack:
            x = stack.pop()
            for y in d.succ(x):
                if y > s and y not in on_path and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen)

    def extend(v: int, s: int) -> None:
        nonlocal best_len, best, nodes, stop
        nodes += 1
        size = len(path)
        if size >= 2 and d.has_arc(v, s) and size > best_len:
            best_len = size
            best = tuple(path)
            if prune and best_len >= bound:
                stop = True
                return
        if size == d.n:
            return
        if prune and size + optimistic(v, s) < best_len:
            return
        for w in d.succ(v):
            if stop:
                return
            if w <= s or w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            extend(w, s)
            path.pop()
            on_path.remove(w)

    for s in range(d.n):
        if stop:
            break
        path.append(s)
        on_path.add(s)
        extend(s, s)
        path.pop()
        on_path.remove(s)

    cycle = VertexSeq(SeqKind.CYCLE, best) if best else None
    early = prune and best_len >= bound and best_len > 0
    return SearchResult(cycle, best_len, nodes, bound if prune else d.n, early, msd_bounds)


def longest_cycle_pruned(d: Digraph) -> SearchResult:
    """Branch-and-bound search with all pruning enabled."""
    return longest_cycle_search(d, prune=True)


def has_cycle_of_length(d: Digraph, target: int) -> tuple[bool, VertexSeq | None]:
    """Decide whether a simple cycle of exactly the target length exists.

    Runs the pruned DFS with the target as both cap and goal; returns the
    first (lexicographically least) witness or (False, None).
    """
    if not (2 <= target <= d.n):
        raise GraphError(f"target must be between 2 and {d.n}, got {target}")
    on_path: set[int] = set()
    path: list[int] = []

    def reach_count(head: int, s: int) -> int:
        seen: set[int] = set()
        stack = [w for w in d.succ(head) if w > s and w not in on_path]
        seen.update(stack)
        while stack:
            x = stack.pop()
            for y in d.succ(x):
                if y > s and y not in on_path and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen)

    def extend(v: int, s: int) -> tuple[int, ...] | None:
        size = len(path)
        if size == target:
            return tuple(path) if d.has_arc(v, s) else None
        if size + reach_count(v, s) < target:
            return None
        for w in d.succ(v):
            if w <= s or w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            found = extend(w, s)
            path.pop()
            on_path.remove(w)
            if found:
                return found
        return None

    for s in range(d.n):
        path.append(s)
        on_path.add(s)
        found = extend(s, s)
        path.pop()
        on_path.remove(s)
        if found:
            return True, VertexSeq(SeqKind.CYCLE, found)
    return False, None
