#!/usr/bin/env python3
"""Benchmark the two enumeration kernels (compiled Cython vs pure Python).

Runs a fixed grid of oracle counts on each available backend, checks the
results agree, and prints a timing table with the speedup.

Usage:  python3 benchmarks/bench_oracle.py [--quick]
"""

import argparse
import sys
import time

from quotmotives import _enum_py

try:
    from quotmotives import _enum_cy
except ImportError:
    _enum_cy = None

FULL_GRID = [
    # (n, r, q, d, punctual)
    (2, 2, 2, 1, True),
    (3, 1, 2, 1, True),
    (3, 2, 2, 1, True),
    (3, 1, 3, 1, True),
    (4, 1, 2, 1, True),
    (2, 2, 2, 2, True),
    (2, 1, 3, 2, True),
    (3, 1, 2, 2, True),
    (3, 2, 2, 1, False),
    (2, 2, 2, 2, False),
]
QUICK_GRID = FULL_GRID[:3] + [FULL_GRID[5]]


def bench(kernel, case):
    t0 = time.perf_counter()
    value = kernel.count_stable(*case)
    return value, time.perf_counter() - t0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="run a reduced grid")
    args = parser.parse_args()
    grid = QUICK_GRID if args.quick else FULL_GRID

    if _enum_cy is None:
        print("compiled kernel not built; timing the pure-Python kernel only\n")

    header = f"{'case (n,r,q,d,punctual)':<28} {'python':>10}"
    if _enum_cy is not None:
        header += f" {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))

    totals = [0.0, 0.0]
    for case in grid:
        v_py, t_py = bench(_enum_py, case)
        totals[0] += t_py
        row = f"{str(case):<28} {t_py:>9.3f}s"
        if _enum_cy is not None:
            v_cy, t_cy = bench(_enum_cy, case)
            totals[1] += t_cy
            if v_py != v_cy:
                print(f"MISMATCH on {case}: python={v_py} compiled={v_cy}")
                return 1
            row += f" {t_cy:>9.3f}s {t_py / t_cy if t_cy else float('inf'):>8.1f}x"
        print(row)

    print("-" * len(header))
    summary = f"{'total':<28} {totals[0]:>9.3f}s"
    if _enum_cy is not None:
        summary += (f" {totals[1]:>9.3f}s"
                    f" {totals[0] / totals[1] if totals[1] else float('inf'):>8.1f}x")
    print(summary)
    return 0


if __name__ == "__main__":
    sys.exit(main())
