"""Pure numpy/scipy implementations of the iteration-heavy solver kernels.

This module is the reference backend; `nnsolve._kernels._core` is a compiled
drop-in replacement with the same signatures.  Results of the two backends
agree up to floating-point reduction order.
"""
from __future__ import annotations

import numpy as np

from ..linalg import solve_spd

BACKEND_NAME = "pure"


def trnnc_step_arrays(g, c, u, alpha, omega):
    """One relaxed iteration of the squared-variable Tikhonov map.

    `g` is A^T A and `c` is A^T p, both precomputed.  Builds
    S = diag(u) g diag(u) + alpha*I, solves S w = u*c and returns
    omega*u + (1-omega)*w.  S is formed as g * outer(u, u), which is exactly
    symmetric in IEEE arithmetic.
    """
    n = u.shape[0]
    s = g * np.outer(u, u)
    s[np.diag_indices(n)] += alpha
    w = solve_spd(s, u * c)
    return omega * u + (1.0 - omega) * w


def trnnc_iterate(a, p, u0, alpha, omega, eps_stop, max_iters):
    """Run the squared-variable iteration until the u-step norm falls
    below eps_stop or max_iters is reached.

    Returns (u, iterations, converged, step_norms).
    """
    g = a.T @ a
    c = a.T @ p
    u = u0.copy()
    step_norms = np.empty(max_iters)
    for k in range(max_iters):
        u_next = trnnc_step_arrays(g, c, u, alpha, omega)
        step = float(np.linalg.norm(u_next - u))
        step_norms[k] = step
        u = u_next
        if step <= eps_stop:
            return u, k + 1, True, step_norms[: k + 1].copy()
    return u, max_iters, False, step_norms


def art_sweeps(a, b, relax, sweeps):
    """Cyclic Kaczmarz row projections from v = 0.

    Caller guarantees no zero rows.  Returns the iterate after `sweeps`
    full passes over the rows.
    """
    m, n = a.shape
    row_norm2 = np.einsum("ij,ij->i", a, a)
    v = np.zeros(n)
    for _ in range(sweeps):
        for i in range(m):
            row = a[i]
            v += (relax * (b[i] - row @ v) / row_norm2[i]) * row
    return v


def smart_iterate(a, b, v0, max_iters, tol):
    """Multiplicative simultaneous reconstruction iteration.

    v stays entrywise positive.  Stops when the relative iterate change
    drops to tol or after max_iters.  Returns (v, iterations, converged).
    """
    col_sum = a.sum(axis=0)
    v = v0.copy()
    for k in range(max_iters):
        av = a @ v
        v_next = v * np.exp((a.T @ np.log(b / av)) / col_sum)
        delta = float(np.linalg.norm(v_next - v))
        if delta <= tol * float(np.linalg.norm(v)):
            return v_next, k + 1, True
        v = v_next
    return v, max_iters, False


def mrnsd_iterate(a, b, v0, max_iters, tol):
    """Residual-norm steepest descent restricted to the non-negative cone.

    Uses the scaled direction d = -v*g with a boundary-limited step, so
    iterates stay entrywise >= 0.  Stops when ||v*g|| falls to tol times its
    initial value, at stagnation (||Ad|| = 0 with nonzero gradient), or at
    max_iters.  Returns (v, iterations, converged, stagnated).
    """
    v = v0.copy()
    g = a.T @ (a @ v - b)
    d0 = float(np.linalg.norm(v * g))
    for k in range(max_iters):
        d = -v * g
        if float(np.linalg.norm(d)) <= tol * d0:
            return v, k, True, False
        gd = float(g @ d)
        ad = a @ d
        ad2 = float(ad @ ad)
        if ad2 == 0.0:
            return v, k, False, True
        theta = -gd / ad2
        neg = d < 0.0
        if neg.any():
            theta = min(theta, float(np.min(-v[neg] / d[neg])))
        # clamp: the boundary step lands on 0 only up to rounding
        v = np.maximum(v + theta * d, 0.0)
        g = a.T @ (a @ v - b)
    return v, max_iters, False, False
