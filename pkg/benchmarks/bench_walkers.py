#!/usr/bin/env python3
"""Benchmark the compiled walker kernels against the pure-Python fallback.

Each row times one walker on one input with both implementations and
reports the speedup.  Inputs are sized so every walk finishes (the cap is
set far above the true leaf counts).

Run from the repository root:  python benchmarks/bench_walkers.py
"""

import time

from mpart import _walkers_py
from mpart.counting import chi_vector
from mpart.radix import to_base

try:
    from mpart import _walkers as _compiled
except ImportError:
    _compiled = None

CAP = 10**9

# n chosen per base so each walk finishes around 10**6 leaves
CASES = [
    ("nested_sum_b", 2, 315),
    ("nested_sum_b", 3, 1103),
    ("nested_sum_b", 5, 4259),
    ("nested_sum_c", 2, 315),
    ("nested_sum_c", 3, 1103),
    ("walk_partitions", 2, 315),
    ("walk_partitions", 5, 4259),
    ("walk_gapfree", 2, 390),
    ("walk_gapfree", 3, 1150),
]


def call(impl, name, m, n):
    if name == "nested_sum_b":
        return impl.nested_sum_b(m, list(to_base(m, n).digits), CAP)
    if name == "nested_sum_c":
        r = to_base(m, n)
        alpha = list(r.digits)
        chi = list(chi_vector(r))
        tops = [n // m**k - 1 for k in range(1, len(alpha))]
        return impl.nested_sum_c(m, alpha, chi, tops, CAP)
    if name == "walk_partitions":
        return impl.walk_partitions(m, n, CAP)
    return impl.walk_gapfree(m, n, CAP)


def timed(impl, name, m, n):
    best = float("inf")
    result = None
    for _ in range(3):
        start = time.perf_counter()
        result = call(impl, name, m, n)
        best = min(best, time.perf_counter() - start)
    return result, best


def main():
    if _compiled is None:
        print("compiled extension not built; timing the fallback only")
    header = f"{'walker':<16} {'m':>2} {'n':>6} {'count':>12} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, m, n in CASES:
        py_result, py_time = timed(_walkers_py, name, m, n)
        if _compiled is not None:
            c_result, c_time = timed(_compiled, name, m, n)
            assert c_result == py_result, (name, m, n, c_result, py_result)
            print(f"{name:<16} {m:>2} {n:>6} {py_result:>12} {py_time:>9.3f}s "
                  f"{c_time:>9.4f}s {py_time / c_time:>7.1f}x")
        else:
            print(f"{name:<16} {m:>2} {n:>6} {py_result:>12} {py_time:>9.3f}s {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
