"""Batched minimality filters used by the exhaustive enumerator.

A candidate digraph on n vertices is encoded as a bitmask over the
n*(n-1) ordered vertex pairs (lexicographic position order).  The filter
answers, per mask: every vertex has in- and out-degree >= 1, the graph
is strongly connected, and no arc is transitive.

Three interchangeable backends:

- ``numba``: jitted per-graph bitset loops (default when numba imports).
- ``numpy``: vectorized boolean-matrix closure over whole batches.
- ``python``: one Digraph + check_msd per mask; the slow reference.

Select explicitly via the MSD_KERNEL environment variable or the
``backend`` argument.
"""

from __future__ import annotations

import os

import numpy as np

from .analysis import check_msd
from .digraph import Digraph, GraphError

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

BACKENDS = ("numba", "numpy", "python")


def arc_positions(n: int) -> list[tuple[int, int]]:
    """All ordered pairs (u, v), u != v, in lexicographic order; bit p of
    a candidate mask switches pair p on."""
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def active_backend() -> str:
    """Backend chosen by MSD_KERNEL, defaulting to numba when available."""
    env = os.environ.get("MSD_KERNEL")
    if env is None:
        return "numba" if HAS_NUMBA else "numpy"
    if env not in BACKENDS:
        raise GraphError(f"MSD_KERNEL must be one of {BACKENDS}, got {env!r}")
    if env == "numba" and not HAS_NUMBA:
        raise GraphError("MSD_KERNEL=numba but numba is not importable")
    return env


def filter_msd_masks(n: int, masks: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Boolean array marking which masks encode a minimal strong digraph."""
    if n < 2:
        raise GraphError("mask filter needs n >= 2")
    backend = backend or active_backend()
    if backend not in BACKENDS:
        raise GraphError(f"backend must be one of {BACKENDS}, got {backend!r}")
    positions = arc_positions(n)
    tails = np.array([u for u, _ in positions], dtype=np.int64)
    heads = np.array([v for _, v in positions], dtype=np.int64)
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if backend == "numba":
        if not HAS_NUMBA:
            raise GraphError("numba backend requested but numba is not importable")
        out = np.zeros(masks.shape[0], dtype=np.bool_)
        _filter_numba(n, tails, heads, masks, out)
        return out
    if backend == "numpy":
        return _filter_numpy(n, tails, heads, masks)
    return _filter_python(n, tails, heads, masks)


def _filter_python(n: int, tails: np.ndarray, heads: np.ndarray, masks: np.ndarray) -> np.ndarray:
    out = np.zeros(masks.shape[0], dtype=np.bool_)
    for i, mask in enumerate(masks):
        mask = int(mask)
        arcs = [(int(tails[p]), int(heads[p])) for p in range(tails.shape[0]) if (mask >> p) & 1]
        out[i] = check_msd(Digraph(n, arcs)).is_msd
    return out


def _bool_closure(a: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a batch of boolean adjacency
    matrices by repeated squaring."""
    n = a.shape[-1]
    r = a | np.eye(n, dtype=bool)
    hops = 1
    while hops < n - 1:
        m = r.astype(np.uint8)
        r = (m @ m) > 0
        hops *= 2
    return r


def _filter_numpy(n: int, tails: np.ndarray, heads: np.ndarray, masks: np.ndarray) -> np.ndarray:
    out = np.zeros(masks.shape[0], dtype=np.bool_)
    if masks.shape[0] == 0:
        return out
    p = tails.shape[0]
    bits = ((masks[:, None] >> np.arange(p, dtype=np.int64)) & 1).astype(bool)
    a = np.zeros((masks.shape[0], n, n), dtype=bool)
    a[:, tails, heads] = bits
    degree_ok = a.any(axis=2).all(axis=1) & a.any(axis=1).all(axis=1)
    idx = np.flatnonzero(degree_ok)
    if idx.size == 0:
        return out
    closure = _bool_closure(a[idx])
    strong = closure.all(axis=(1, 2))
    idx = idx[strong]
    if idx.size == 0:
        return out
    alive = np.ones(idx.size, dtype=bool)
    sub = a[idx]
    for q in range(p):
        u, v = int(tails[q]), int(heads[q])
        sel = np.flatnonzero(alive & sub[:, u, v])
        if sel.size == 0:
            continue
        deleted = sub[sel].copy()
        deleted[:, u, v] = False
        transitive = _bool_closure(deleted)[:, u, v]
        alive[sel[transitive]] = False
    out[idx[alive]] = True
    return out


if HAS_NUMBA:

    @njit(cache=True)
    def _filter_numba(n, tails, heads, masks, out):  # pragma: no cover - jitted
        p = tails.shape[0]
        rows_out = np.zeros(n, dtype=np.int64)
        rows_in = np.zeros(n, dtype=np.int64)
        full = (1 << n) - 1
        for g in range(masks.shape[0]):
            mask = masks[g]
            for v in range(n):
                rows_out[v] = 0
                rows_in[v] = 0
            for q in range(p):
                if (mask >> q) & 1:
                    rows_out[tails[q]] |= 1 << heads[q]
                    rows_in[heads[q]] |= 1 << tails[q]
            ok = True
            for v in range(n):
                if rows_out[v] == 0 or rows_in[v] == 0:
                    ok = False
                    break
            if ok:
                for direction in range(2):
                    reach = np.int64(1)
                    frontier = np.int64(1)
                    while frontier != 0:
                        nxt = np.int64(0)
                        for v in range(n):
                            if (frontier >> v) & 1:
                                if direction == 0:
                                    nxt |= rows_out[v]
                                else:
                                    nxt |= rows_in[v]
                        frontier = nxt & ~reach
                        reach |= frontier
                    if reach != full:
                        ok = False
                        break
            if ok:
                for q in range(p):
                    if (mask >> q) & 1:
                        u = tails[q]
                        v = heads[q]
                        cut = ~(np.int64(1) << v)
                        reach = rows_out[u] & cut
                        frontier = reach
                        while frontier != 0:
                            nxt = np.int64(0)
                            for w in range(n):
                                if (frontier >> w) & 1:
                                    row = rows_out[w]
                                    if w == u:
                                        row &= cut
                                    nxt |= row
                            frontier = nxt & ~reach
                            reach |= frontier
                        if (reach >> v) & 1:
                            ok = False
                            break
            out[g] = ok

else:  # pragma: no cover - exercised only without numba

    def _filter_numba(n, tails, heads, masks, out):
        raise GraphError("numba backend requested but numba is not importable")
