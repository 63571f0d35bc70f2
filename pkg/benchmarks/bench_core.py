#!/usr/bin/env python3
"""Benchmark the two row-reduction backends on representative workloads.

The compiled twin keeps Python-int entries (exactness is non-negotiable), so
the speedup comes from removing interpreter overhead in the merge loops.
Run:  python benchmarks/bench_core.py
"""

import random
import time

from confsym._core import pure
from confsym.weyl import _constraint_rows

try:
    from confsym._core import _speed
except ImportError:
    _speed = None


def dense_system(seed, nrows, ncols, span=9):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        cols = list(range(ncols))
        vals = []
        for _ in cols:
            vals.append(rng.randint(-span, span))
            vals.append(rng.randint(-span, span))
        rows.append((cols, vals))
    return rows


def weyl_system(p, q):
    return _constraint_rows(p, q)


WORKLOADS = [
    ("weyl constraints (2,2), 256 cols", lambda: weyl_system(2, 2)),
    ("weyl constraints (5,0), 625 cols", lambda: weyl_system(5, 0)),
    ("weyl constraints (3,3), 1296 cols", lambda: weyl_system(3, 3)),
    ("dense random 40x25", lambda: dense_system(1, 40, 25)),
    ("dense random 60x40", lambda: dense_system(2, 60, 40)),
]


def best_of(fn, reps=3):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_backend(backend, rows):
    return backend.rref_sparse([(list(c), list(v)) for c, v in rows], 2)


def main():
    print(f"{'workload':<36} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, make in WORKLOADS:
        rows = make()
        t_pure = best_of(lambda: run_backend(pure, rows))
        if _speed is None:
            print(f"{name:<36} {t_pure:>9.3f}s {'n/a':>10} {'n/a':>9}")
            continue
        t_fast = best_of(lambda: run_backend(_speed, rows))
        assert run_backend(pure, rows) == run_backend(_speed, rows)
        print(f"{name:<36} {t_pure:>9.3f}s {t_fast:>9.3f}s {t_pure / t_fast:>8.2f}x")
    if _speed is None:
        print("\ncompiled backend not built; run `python setup.py build_ext --inplace`")


if __name__ == "__main__":
    main()
