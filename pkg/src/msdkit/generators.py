"""Corpus builders: named constructions, exhaustive small-order
enumeration, and seeded random generation by ear growth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from ._kernels import arc_positions, filter_msd_masks
from .analysis import check_msd
from .digraph import Digraph, GraphError

ENUMERATION_CAP = 5
_CHUNK = 1 << 15


@dataclass(frozen=True)
class GeneratorConfig:
    """Seeded generation request: same seed and config always produce the
    same graph."""

    seed: int
    target_order: int
    max_attempts: int = 1000


def directed_cycle(n: int) -> Digraph:
    """The cycle 0 -> 1 -> ... -> n-1 -> 0, the simplest minimal strong
    digraph."""
    if n < 2:
        raise GraphError(f"a directed cycle needs at least 2 vertices, got {n}")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def _candidate_masks(n: int) -> Iterator[np.ndarray]:
    """Arc-set bitmasks of all candidate sizes n..2(n-1), in canonical
    order (ascending size, then lexicographic arc tuple), chunked."""
    positions = arc_positions(n)
    buf: list[int] = []
    for m in range(n, 2 * (n - 1) + 1):
        for combo in combinations(range(len(positions)), m):
            buf.append(sum(1 << p for p in combo))
            if len(buf) == _CHUNK:
                yield np.array(buf, dtype=np.int64)
                buf.clear()
    if buf:
        yield np.array(buf, dtype=np.int64)


def enumerate_msds(n: int, backend: str | None = None) -> Iterator[Digraph]:
    """Every labeled minimal strong digraph of order n, streamed in
    canonical arc-set order.

    Only minimal strong digraphs have n <= m <= 2(n-1) arcs, so only
    those sizes are generated before filtering.  Capped at n = 5; the
    space grows as 2^(n(n-1)), use random_msd beyond the cap.
    """
    if n < 1:
        raise GraphError(f"order must be positive, got {n}")
    if n > ENUMERATION_CAP:
        raise GraphError(
            f"exhaustive enumeration is capped at n = {ENUMERATION_CAP}; use random_msd for n = {n}")
    if n == 1:
        yield Digraph(1, [])
        return
    positions = arc_positions(n)
    for chunk in _candidate_masks(n):
        keep = filter_msd_masks(n, chunk, backend=backend)
        for mask in chunk[keep]:
            mask = int(mask)
            arcs = [positions[p] for p in range(len(positions)) if (mask >> p) & 1]
            yield Digraph(n, arcs)


def random_msd(cfg: GeneratorConfig) -> Digraph:
    """Random minimal strong digraph of exactly the target order.

    Starts from a random directed cycle and repeatedly attaches an ear
    (a path of fresh vertices between two existing ones, possibly equal).
    Each attachment is re-checked for minimality and rolled back if it
    created a transitive arc; after max_attempts rollbacks the seed is
    declared unlucky.  No uniformity over minimal strong digraphs is
    claimed or attempted.
    """
    n = cfg.target_order
    if n < 2:
        raise GraphError(f"target order must be at least 2, got {n}")
    rng = random.Random(cfg.seed)
    q = rng.randint(2, n)
    arcs = [(i, (i + 1) % q) for i in range(q)]
    order = q
    failures = 0
    while order < n:
        t = rng.randint(1, n - order)
        a = rng.randrange(order)
        b = rng.randrange(order)
        ear = [(a, order)] + [(order + i, order + i + 1) for i in range(t - 1)] + [(order + t - 1, b)]
        candidate = Digraph(order + t, arcs + ear)
        if check_msd(candidate).is_msd:
            arcs = arcs + ear
            order += t
        else:
            failures += 1
            if failures >= cfg.max_attempts:
                raise GraphError(
                    f"gave up after {failures} rejected ear attachments; retry with another seed")
    return Digraph(n, arcs)


def random_strong_digraph(cfg: GeneratorConfig, extra_arcs: int | None = None) -> Digraph:
    """Random strongly connected digraph, not necessarily minimal.

    Built like random_msd but without minimality rollbacks, then
    sprinkled with extra arcs (a seeded count when not given).  Useful as
    the arbitrary strong input of subdivision tests.
    """
    n = cfg.target_order
    if n < 2:
        raise GraphError(f"target order must be at least 2, got {n}")
    rng = random.Random(cfg.seed)
    q = rng.randint(2, n)
    arcs = [(i, (i + 1) % q) for i in range(q)]
    order = q
    while order < n:
        t = rng.randint(1, n - order)
        a = rng.randrange(order)
        b = rng.randrange(order)
        arcs += [(a, order)] + [(order + i, order + i + 1) for i in range(t - 1)] + [(order + t - 1, b)]
        order += t
    have = set(arcs)
    k = extra_arcs if extra_arcs is not None else rng.randint(0, n)
    for _ in range(k):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v and (u, v) not in have:
            have.add((u, v))
            arcs.append((u, v))
    return Digraph(n, arcs)
