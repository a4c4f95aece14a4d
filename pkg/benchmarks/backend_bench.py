#!/usr/bin/env python3
"""Timing comparison of the compiled kernel core against the pure fallback.

Runs each iteration kernel on the n=30 benchmark problem with a fixed
iteration budget (stopping disabled) and reports best-of-N wall times.

    python benchmarks/backend_bench.py [--reps 3]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from nnsolve._kernels import _pure
from nnsolve.problems import perturb, test_matrix, test_vector

try:
    from nnsolve._kernels import _core
except ImportError:
    _core = None


def best_time(fn, reps):
    best = float("inf")
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def workloads():
    a = test_matrix(30)
    prob = perturb(a, test_vector(2), 1e-10, seed=44, name="test2")
    b = prob.b
    u0 = np.ones(30)
    v0 = np.ones(30)
    # eps/tol of 0 disable early stopping so both backends do identical work
    return [
        ("trnnc_iterate (10k iters)",
         lambda k: k.trnnc_iterate(a, b, u0, 1e-13, 0.5, 0.0, 10_000)),
        ("art_sweeps (1k sweeps)",
         lambda k: k.art_sweeps(a, b, 1.0, 1_000)),
        ("smart_iterate (10k iters)",
         lambda k: k.smart_iterate(a, b, v0, 10_000, 0.0)),
        ("mrnsd_iterate (10k iters)",
         lambda k: k.mrnsd_iterate(a, b, v0, 10_000, 0.0)),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--reps", type=int, default=3)
    args = parser.parse_args()

    if _core is None:
        print("compiled core not built; timing the pure backend only")
    print(f"{'kernel':<28} {'pure [s]':>10} {'compiled [s]':>13} {'speedup':>9}")
    for name, work in workloads():
        t_pure = best_time(lambda: work(_pure), args.reps)
        if _core is not None:
            t_core = best_time(lambda: work(_core), args.reps)
            print(f"{name:<28} {t_pure:>10.4f} {t_core:>13.4f} {t_pure / t_core:>8.1f}x")
        else:
            print(f"{name:<28} {t_pure:>10.4f} {'-':>13} {'-':>9}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
