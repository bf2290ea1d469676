#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

The kernel level times conv_trunc/inverse_trunc directly on realistic data
(dense partition-function coefficients; an invertible eta-type unit).  With
--full it also times `qdiv verify --suite all` end to end in subprocesses,
once per backend, since backend selection happens at import time.

Usage:  python3 benchmarks/bench_kernels.py [--full] [--orders 100,200,400,800]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

from qdiv import _kernels_py
from qdiv.series import pochhammer_inf

try:
    from qdiv import _kernels
except ImportError:
    _kernels = None


def partition_coeffs(order):
    return list(pochhammer_inf(1, 1, 1, order).inverse().coeffs)


def euler_coeffs(order):
    return list(pochhammer_inf(1, 1, 1, order).coeffs)


def best_of(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(orders):
    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    print(f"{'op':<10} {'order':>6} " + "".join(f"{name:>12}" for name, _ in backends)
          + ("     speedup" if len(backends) == 2 else ""))
    for order in orders:
        dense = partition_coeffs(order)
        sparse = euler_coeffs(order)
        cases = [
            ("conv", lambda mod, a=dense, b=sparse, n=order: mod.conv_trunc(a, b, n)),
            ("inverse", lambda mod, a=sparse, n=order: mod.inverse_trunc(a, n)),
        ]
        for opname, op in cases:
            times = [best_of(lambda mod=mod: op(mod)) for _, mod in backends]
            row = f"{opname:<10} {order:>6} " + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) == 2 and times[1] > 0:
                row += f"  {times[0] / times[1]:>9.2f}x"
            print(row)


def bench_full(order=400):
    print(f"\nend-to-end: qdiv verify --suite all --k-max 4 --order {order}")
    for name, env_extra in (("cython", {}), ("python", {"QDIV_PURE_PYTHON": "1"})):
        if name == "cython" and _kernels is None:
            print(f"{name:>8}: extension not built, skipped")
            continue
        env = dict(os.environ, **env_extra)
        t0 = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-m", "qdiv.cli", "verify", "--suite", "all",
             "--k-max", "4", "--order", str(order)],
            capture_output=True,
            text=True,
            env=env,
        )
        elapsed = time.perf_counter() - t0
        status = "ok" if proc.returncode == 0 else f"rc={proc.returncode}"
        print(f"{name:>8}: {elapsed:6.2f}s  ({status})")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", default="100,200,400,800")
    parser.add_argument("--full", action="store_true",
                        help="also run the end-to-end verify benchmark")
    args = parser.parse_args()
    orders = [int(x) for x in args.orders.split(",")]
    if _kernels is None:
        print("note: compiled extension unavailable; timing pure Python only")
    bench_kernels(orders)
    if args.full:
        bench_full()


if __name__ == "__main__":
    main()
