#!/usr/bin/env python3
"""Benchmark the enumeration kernels: compiled extension vs pure Python.

Usage: python benchmarks/bench_enum.py [--min-n 6] [--max-n 9] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from dncat.edges import compatibility_masks
import dncat._maxcliques_py as pure

try:
    import dncat._maxcliques_cy as compiled
except ImportError:
    compiled = None


def time_kernel(kernel, masks, m, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kernel.maximal_cliques(list(masks), m)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--min-n", type=int, default=6)
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    kernels = [("python", pure)]
    if compiled is not None:
        kernels.append(("cython", compiled))
    else:
        print("compiled kernel not built; timing the fallback only")

    print(f"{'n':>3} {'cliques':>9}" + "".join(f" {name:>12}" for name, _ in kernels)
          + ("      speedup" if compiled else ""))
    for n in range(args.min_n, args.max_n + 1):
        masks = compatibility_masks(n)
        times = []
        counts = set()
        for _, kernel in kernels:
            dt, result = time_kernel(kernel, masks, len(masks), args.repeat)
            times.append(dt)
            counts.add(len(result))
        if len(counts) != 1:
            raise SystemExit(f"kernel disagreement at n={n}: {counts}")
        row = f"{n:>3} {counts.pop():>9}" + "".join(f" {t * 1000:>10.1f}ms" for t in times)
        if compiled is not None:
            row += f"  {times[0] / times[1]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
