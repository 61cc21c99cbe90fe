#!/usr/bin/env python3
"""Benchmark the compiled modular-chain kernels against the pure-Python fallback.

The b-chain kernel is the hot loop of every scan: computing a term at index n
costs one O(n) chain, so a full scan of N terms is O(N^2) kernel steps. This
script times the same workload through both implementations and prints the
speedup, plus an end-to-end term-scan comparison.

Usage:
    python benchmarks/bench_kernels.py [--terms 2000] [--repeat 3]
"""

import argparse
import math
import time

from gcdseq import _backend, _kernels_py
from gcdseq.families import MAIN, numerator

try:
    from gcdseq import _kernel
except ImportError:
    _kernel = None


def chain_workload(b_mod_pair, n_max):
    """The exact kernel work of scanning the main sequence up to n_max."""
    acc = 0
    for n in range(3, n_max + 1):
        x = numerator(MAIN, n)
        prev, cur = b_mod_pair(n - 3, x)
        acc ^= (cur + n * prev) % x
    return acc


def factorial_workload(factorial_mod, n_max):
    acc = 0
    for n in range(3, n_max + 1):
        x = numerator(MAIN, n)
        acc ^= math.gcd(x, factorial_mod(n - 1, x))
    return acc


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--terms", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    n_max = args.terms + 2

    print(f"active backend: {_backend.backend_name()}")
    if _kernel is None:
        print("compiled extension not available; timing the fallback only\n")

    rows = []
    workloads = [("b-chain scan", chain_workload, "b_mod_pair"),
                 ("factorial-gcd scan", factorial_workload, "factorial_mod")]
    for label, workload, attr in workloads:
        py_fn = getattr(_kernels_py, attr)
        py_time = best_of(lambda: workload(py_fn, n_max), args.repeat)
        if _kernel is not None:
            ext_fn = getattr(_kernel, attr)
            assert workload(ext_fn, n_max) == workload(py_fn, n_max)
            ext_time = best_of(lambda: workload(ext_fn, n_max), args.repeat)
            rows.append((label, py_time, ext_time, py_time / ext_time))
        else:
            rows.append((label, py_time, None, None))

    print(f"{args.terms} terms, best of {args.repeat}:")
    header = f"{'workload':<22}{'pure-python':>14}{'compiled':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, py_time, ext_time, speedup in rows:
        if ext_time is None:
            print(f"{label:<22}{py_time:>12.3f}s{'-':>12}{'-':>10}")
        else:
            print(f"{label:<22}{py_time:>12.3f}s{ext_time:>11.3f}s{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
