"""Exact characteristic polynomial of the adjacency matrix, two ways.

det(xI - A) = x^n + k1 x^(n-1) + ... + kn.  By the coefficients theorem
for digraphs, ki is a signed count of the families of vertex-disjoint
directed cycles covering exactly i vertices: each family contributes
(-1)^(number of cycles).  The toolkit computes the coefficients by
enumerating those families and, independently, by an integer matrix
recurrence; the two must agree on every digraph.

On a minimal strong digraph the coefficients are tightly constrained:
|ki| <= C(n, i), the constant term is -1, 0 or 1, and no vertex subset
admits more than one disjoint cycle cover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analysis import check_msd
from .digraph import ConsistencyError, Digraph, GraphError


@dataclass(frozen=True)
class CharPoly:
    """Coefficients k1..kn of the monic characteristic polynomial."""

    n: int
    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        parts = [f"x^{self.n}"]
        for i, k in enumerate(self.coeffs, start=1):
            if k == 0:
                continue
            power = self.n - i
            term = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            parts.append(f"{'-' if k < 0 else '+'} {abs(k)}{term}")
        return " ".join(parts)


def _succ_masks(d: Digraph) -> list[int]:
    return [sum(1 << w for w in d.succ(v)) for v in d.vertices()]


def _cycle_masks_through(v: int, allowed: int, succ: list[int]):
    """Vertex masks of the directed cycles through v that stay inside the
    allowed mask.  Two traversal orders of the same vertex set are two
    distinct cycles and are both produced."""
    out: list[int] = []
    start_bit = 1 << v

    def walk(x: int, visited: int) -> None:
        nbrs = succ[x] & allowed
        if nbrs & start_bit and visited != start_bit:
            out.append(visited)
        todo = nbrs & ~visited
        while todo:
            low = todo & -todo
            todo ^= low
            walk(low.bit_length() - 1, visited | low)

    walk(v, start_bit)
    return out


def charpoly_cycle_covers(d: Digraph) -> CharPoly:
    """Coefficients by direct enumeration of disjoint cycle families.

    Recurses over the lowest-id undecided vertex: leave it uncovered, or
    cover it with each cycle through it that uses only undecided vertices
    of higher id.  Every family is built exactly once.
    """
    if d.n < 1:
        raise GraphError("characteristic polynomial needs at least one vertex")
    n = d.n
    succ = _succ_masks(d)
    coeffs = [0] * (n + 1)

    def rec(v: int, used: int, ncycles: int, size: int) -> None:
        while v < n and (used >> v) & 1:
            v += 1
        if v == n:
            if ncycles:
                coeffs[size] += -1 if ncycles % 2 else 1
            return
        rec(v + 1, used, ncycles, size)
        allowed = ~used & -(1 << v) & ((1 << n) - 1)
        for mask in _cycle_masks_through(v, allowed, succ):
            rec(v + 1, used | mask, ncycles + 1, size + mask.bit_count())

    rec(0, 0, 0, 0)
    return CharPoly(n, tuple(coeffs[1:]))


def charpoly_determinant(d: Digraph) -> CharPoly:
    """Independent coefficients via the Faddeev-LeVerrier recurrence over
    exact integers (arbitrary precision, no overflow possible)."""
    if d.n < 1:
        raise GraphError("characteristic polynomial needs at least one vertex")
    n = d.n
    a = np.zeros((n, n), dtype=object)
    for u, v in d.arcs:
        a[u, v] = 1
    eye = np.eye(n, dtype=object)
    m = eye.copy()
    coeffs: list[int] = []
    for k in range(1, n + 1):
        am = a @ m
        tr = int(np.trace(am))
        if tr % k:
            raise ConsistencyError(f"trace {tr} not divisible by {k} in the recurrence")
        c = -(tr // k)
        coeffs.append(c)
        m = am + c * eye
    if np.any(a @ m != 0):
        raise ConsistencyError("recurrence did not terminate at the zero matrix")
    return CharPoly(n, tuple(coeffs))


def count_disjoint_cycle_covers(d: Digraph, subset) -> int:
    """Number of ways to partition the subset into vertex-disjoint
    directed cycles (a cyclic order and its reverse count separately).
    At most 1 on minimal strong digraphs, for every subset."""
    vs = set(subset)
    for v in vs:
        if not (0 <= v < d.n):
            raise GraphError(f"subset vertex {v} outside 0..{d.n - 1}")
    mask = sum(1 << v for v in vs)
    return _cover_counter(d)(mask)


def _cover_counter(d: Digraph):
    """Memoized counter of exact disjoint-cycle covers by vertex mask."""
    succ = _succ_masks(d)
    memo: dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        v = (mask & -mask).bit_length() - 1
        total = 0
        for cyc in _cycle_masks_through(v, mask, succ):
            total += count(mask & ~cyc)
        memo[mask] = total
        return total

    return count


def check_coefficient_bounds(d: Digraph, subset_limit: int = 16) -> list[str]:
    """Verify the coefficient constraints of a minimal strong digraph.

    Checks |ki| <= C(n, i) and kn in {-1, 0, 1}; when n <= subset_limit
    additionally sweeps every vertex subset for the unique-cover property.
    Returns the violations (empty for a correct implementation).
    """
    if not check_msd(d).is_msd:
        raise GraphError("coefficient bounds are stated for minimal strong digraphs")
    cp = charpoly_cycle_covers(d)
    violations: list[str] = []
    for i, k in enumerate(cp.coeffs, start=1):
        cap = math.comb(d.n, i)
        if abs(k) > cap:
            violations.append(f"|k_{i}| = {abs(k)} exceeds C({d.n},{i}) = {cap}")
    if cp.coeffs and cp.coeffs[-1] not in (-1, 0, 1):
        violations.append(f"constant term {cp.coeffs[-1]} outside {{-1, 0, 1}}")
    if d.n <= subset_limit:
        count = _cover_counter(d)
        for mask in range(1, 1 << d.n):
            c = count(mask)
            if c > 1:
                vs = [v for v in range(d.n) if (mask >> v) & 1]
                violations.append(f"subset {vs} has {c} disjoint cycle covers")
    return violations
