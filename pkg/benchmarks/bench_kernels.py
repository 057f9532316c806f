"""Benchmark the batched minimality filter across kernel backends.

Times the jitted bitset kernel against the vectorized numpy path (and
optionally the per-graph python reference) on the full candidate space
of small orders, the same workload enumerate_msds runs.  The numba
kernel is warmed up before timing so compilation is not billed.

Usage:
    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --orders 4 --with-python --repeat 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from msdkit._kernels import BACKENDS, HAS_NUMBA, filter_msd_masks
from msdkit.generators import _candidate_masks


def time_backend(n: int, chunks: list[np.ndarray], backend: str) -> tuple[float, int]:
    start = time.perf_counter()
    kept = 0
    for chunk in chunks:
        kept += int(filter_msd_masks(n, chunk, backend=backend).sum())
    return time.perf_counter() - start, kept


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="compare minimality-filter backends")
    parser.add_argument("--orders", type=int, nargs="+", default=[4, 5],
                        help="graph orders to sweep (enumeration is capped at 5)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed runs per backend; the best one is reported")
    parser.add_argument("--with-python", action="store_true",
                        help="also time the per-graph reference (slow at order 5)")
    args = parser.parse_args(argv)

    backends = [b for b in BACKENDS
                if (b != "numba" or HAS_NUMBA) and (b != "python" or args.with_python)]
    if HAS_NUMBA:
        filter_msd_masks(2, np.zeros(1, dtype=np.int64), backend="numba")

    print(f"{'n':>3} {'masks':>9} {'backend':>8} {'best_s':>10} {'found':>6} {'Mmask/s':>9}")
    for n in args.orders:
        chunks = list(_candidate_masks(n))
        total = sum(c.shape[0] for c in chunks)
        for backend in backends:
            best, kept = min(time_backend(n, chunks, backend) for _ in range(args.repeat))
            print(f"{n:>3} {total:>9} {backend:>8} {best:>10.4f} {kept:>6} {total / best / 1e6:>9.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
