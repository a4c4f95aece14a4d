"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive so it cannot share a failure mode
with the library code it checks.
"""
from __future__ import annotations

import itertools

import numpy as np


def lstsq_objective(a, b, v) -> float:
    return float(np.linalg.norm(a @ v - b))


def nnls_bruteforce(a, b) -> tuple[np.ndarray, float]:
    """Global non-negative least squares by exhaustive support enumeration.

    For every subset of columns solve the unconstrained least-squares
    problem on that support, keep the candidates that are feasible
    (entrywise >= -1e-12, clipped to 0), and return the best.  Only usable
    for small n.
    """
    m, n = a.shape
    best_v = np.zeros(n)
    best_obj = lstsq_objective(a, b, best_v)
    for size in range(1, n + 1):
        for support in itertools.combinations(range(n), size):
            cols = list(support)
            sol = np.linalg.lstsq(a[:, cols], b, rcond=None)[0]
            if (sol < -1e-12).any():
                continue
            v = np.zeros(n)
            v[cols] = np.clip(sol, 0.0, None)
            obj = lstsq_objective(a, b, v)
            if obj < best_obj:
                best_obj = obj
                best_v = v
    return best_v, best_obj


def kkt_violation(a, b, v, tol_zero: float = 0.0) -> float:
    """Largest violation of the non-negative least-squares KKT conditions.

    Checks v >= 0, w = A^T(b - Av) <= 0 on the zero set and w = 0 on the
    support (components with v > tol_zero).
    """
    w = a.T @ (b - a @ v)
    worst = max(0.0, float(-v.min()))
    on_support = v > tol_zero
    if on_support.any():
        worst = max(worst, float(np.abs(w[on_support]).max()))
    if (~on_support).any():
        worst = max(worst, float(w[~on_support].max()))
    return worst
