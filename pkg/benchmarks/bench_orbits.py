#!/usr/bin/env python3
"""Benchmark the orbit-partition kernels: compiled extension vs pure Python.

The partition of all (m^n)! rankings into wreath-product orbits is the
package's hot loop.  This script times both implementations on the same
inputs, verifies they produce identical output, and prints a comparison
table.

    python3 benchmarks/bench_orbits.py
    python3 benchmarks/bench_orbits.py --sizes 2,2 2,3 3,2 --repeat 5
"""

import argparse
import time

from wreathvote import _orbitpy
from wreathvote.combinatorics import committee_permutations, orbit_count

try:
    from wreathvote import _orbitcore
except ImportError:
    _orbitcore = None


def time_kernel(kernel, nitems, perms, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = kernel.partition_rankings(nitems, perms)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        nargs="+",
        default=["2,2", "2,3", "3,2"],
        help="m,n pairs to benchmark (default: 2,2 2,3 3,2)",
    )
    parser.add_argument("--repeat", type=int, default=3, help="repetitions, best time kept")
    args = parser.parse_args()

    if _orbitcore is None:
        print("compiled kernel not available; timing the pure-Python kernel only\n")

    header = f"{'case':>8} {'rankings':>9} {'orbits':>7} {'python':>10}"
    if _orbitcore is not None:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)
    for size in args.sizes:
        m, n = (int(x) for x in size.split(","))
        perms = committee_permutations(m, n)
        nitems = m**n
        t_py, out_py = time_kernel(_orbitpy, nitems, perms, args.repeat)
        row = f"{size:>8} {len(out_py[0]):>9} {len(out_py[1]):>7} {t_py * 1000:>8.1f}ms"
        if _orbitcore is not None:
            t_c, out_c = time_kernel(_orbitcore, nitems, perms, args.repeat)
            if list(out_c[0]) != list(out_py[0]) or list(out_c[1]) != list(out_py[1]):
                raise AssertionError(f"kernels disagree for m={m}, n={n}")
            row += f" {t_c * 1000:>8.1f}ms {t_py / t_c:>7.1f}x"
        if len(out_py[1]) != orbit_count(m, n):
            raise AssertionError(f"orbit count mismatch for m={m}, n={n}")
        print(row)


if __name__ == "__main__":
    main()
