# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled solver kernels.

Drop-in replacement for `nnsolve._kernels._pure`; same signatures and
semantics, with the per-iteration work done in C loops.  The inner
symmetric solve is an unblocked Cholesky factorization, so results may
differ from the pure backend in the last bits.
"""

import numpy as np

from libc.math cimport exp, log, sqrt

from ..linalg import NotPositiveDefiniteError

BACKEND_NAME = "compiled"


cdef int _cholesky_lower(double[:, ::1] s, Py_ssize_t n):
    """In-place lower Cholesky; returns -1 on a non-positive pivot."""
    cdef Py_ssize_t i, j, k
    cdef double acc
    for j in range(n):
        acc = s[j, j]
        for k in range(j):
            acc -= s[j, k] * s[j, k]
        if acc <= 0.0 or acc != acc:
            return -1
        s[j, j] = sqrt(acc)
        for i in range(j + 1, n):
            acc = s[i, j]
            for k in range(j):
                acc -= s[i, k] * s[j, k]
            s[i, j] = acc / s[j, j]
    return 0


cdef void _cho_solve_lower(double[:, ::1] l, double[::1] x, Py_ssize_t n):
    """Solve L L^T w = x in place given the lower factor."""
    cdef Py_ssize_t i, k
    cdef double acc
    for i in range(n):
        acc = x[i]
        for k in range(i):
            acc -= l[i, k] * x[k]
        x[i] = acc / l[i, i]
    for i in range(n - 1, -1, -1):
        acc = x[i]
        for k in range(i + 1, n):
            acc -= l[k, i] * x[k]
        x[i] = acc / l[i, i]


def trnnc_iterate(a, p, u0, double alpha, double omega, double eps_stop,
                  Py_ssize_t max_iters):
    a = np.ascontiguousarray(a, dtype=np.float64)
    p = np.ascontiguousarray(p, dtype=np.float64)
    # the loop only needs A^T A and A^T p
    g_nd = np.ascontiguousarray(a.T @ a)
    c_nd = np.ascontiguousarray(a.T @ p)
    u_nd = np.array(u0, dtype=np.float64, copy=True)
    cdef Py_ssize_t n = g_nd.shape[0]
    s_nd = np.empty((n, n))
    w_nd = np.empty(n)
    steps_nd = np.empty(max_iters)
    cdef double[:, ::1] g = g_nd
    cdef double[::1] c = c_nd
    cdef double[::1] u = u_nd
    cdef double[:, ::1] s = s_nd
    cdef double[::1] w = w_nd
    cdef double[::1] steps = steps_nd
    cdef Py_ssize_t it, i, j, done = 0
    cdef double t, du, step
    cdef bint converged = False
    for it in range(max_iters):
        for i in range(n):
            for j in range(i):
                s[i, j] = g[i, j] * (u[i] * u[j])
            s[i, i] = g[i, i] * (u[i] * u[i]) + alpha
            w[i] = u[i] * c[i]
        if _cholesky_lower(s, n) != 0:
            raise NotPositiveDefiniteError("matrix is not positive definite")
        _cho_solve_lower(s, w, n)
        step = 0.0
        for i in range(n):
            t = omega * u[i] + (1.0 - omega) * w[i]
            du = t - u[i]
            step += du * du
            u[i] = t
        step = sqrt(step)
        steps[it] = step
        done = it + 1
        if step <= eps_stop:
            converged = True
            break
    return u_nd, int(done), bool(converged), steps_nd[:done].copy()


def art_sweeps(a, b, double relax, Py_ssize_t sweeps):
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    cdef double[:, ::1] am = a
    cdef double[::1] bm = b
    cdef Py_ssize_t m = am.shape[0], n = am.shape[1]
    rn_nd = np.empty(m)
    v_nd = np.zeros(n)
    cdef double[::1] rn = rn_nd
    cdef double[::1] v = v_nd
    cdef Py_ssize_t sw, i, j
    cdef double acc, coef
    for i in range(m):
        acc = 0.0
        for j in range(n):
            acc += am[i, j] * am[i, j]
        rn[i] = acc
    for sw in range(sweeps):
        for i in range(m):
            acc = 0.0
            for j in range(n):
                acc += am[i, j] * v[j]
            coef = relax * (bm[i] - acc) / rn[i]
            for j in range(n):
                v[j] += coef * am[i, j]
    return v_nd


def smart_iterate(a, b, v0, Py_ssize_t max_iters, double tol):
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    v_nd = np.array(v0, dtype=np.float64, copy=True)
    cdef double[:, ::1] am = a
    cdef double[::1] bm = b
    cdef double[::1] v = v_nd
    cdef Py_ssize_t m = am.shape[0], n = am.shape[1]
    cs_nd = np.empty(n)
    lr_nd = np.empty(m)
    vn_nd = np.empty(n)
    cdef double[::1] cs = cs_nd
    cdef double[::1] lr = lr_nd
    cdef double[::1] vn = vn_nd
    cdef Py_ssize_t it, i, j
    cdef double acc, delta, vnorm, d
    for j in range(n):
        acc = 0.0
        for i in range(m):
            acc += am[i, j]
        cs[j] = acc
    for it in range(max_iters):
        for i in range(m):
            acc = 0.0
            for j in range(n):
                acc += am[i, j] * v[j]
            lr[i] = log(bm[i] / acc)
        delta = 0.0
        vnorm = 0.0
        for j in range(n):
            acc = 0.0
            for i in range(m):
                acc += am[i, j] * lr[i]
            vn[j] = v[j] * exp(acc / cs[j])
            d = vn[j] - v[j]
            delta += d * d
            vnorm += v[j] * v[j]
        delta = sqrt(delta)
        vnorm = sqrt(vnorm)
        if delta <= tol * vnorm:
            for j in range(n):
                v[j] = vn[j]
            return v_nd, int(it + 1), True
        for j in range(n):
            v[j] = vn[j]
    return v_nd, int(max_iters), False


def mrnsd_iterate(a, b, v0, Py_ssize_t max_iters, double tol):
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    v_nd = np.array(v0, dtype=np.float64, copy=True)
    cdef double[:, ::1] am = a
    cdef double[::1] bm = b
    cdef double[::1] v = v_nd
    cdef Py_ssize_t m = am.shape[0], n = am.shape[1]
    r_nd = np.empty(m)
    g_nd = np.empty(n)
    d_nd = np.empty(n)
    ad_nd = np.empty(m)
    cdef double[::1] r = r_nd
    cdef double[::1] g = g_nd
    cdef double[::1] d = d_nd
    cdef double[::1] ad = ad_nd
    cdef Py_ssize_t it, i, j
    cdef double acc, d0, nd, gd, ad2, theta, tb, t
    for i in range(m):
        acc = 0.0
        for j in range(n):
            acc += am[i, j] * v[j]
        r[i] = acc - bm[i]
    for j in range(n):
        acc = 0.0
        for i in range(m):
            acc += am[i, j] * r[i]
        g[j] = acc
    d0 = 0.0
    for j in range(n):
        t = v[j] * g[j]
        d0 += t * t
    d0 = sqrt(d0)
    for it in range(max_iters):
        nd = 0.0
        for j in range(n):
            d[j] = -v[j] * g[j]
            nd += d[j] * d[j]
        nd = sqrt(nd)
        if nd <= tol * d0:
            return v_nd, int(it), True, False
        gd = 0.0
        for j in range(n):
            gd += g[j] * d[j]
        ad2 = 0.0
        for i in range(m):
            acc = 0.0
            for j in range(n):
                acc += am[i, j] * d[j]
            ad[i] = acc
            ad2 += acc * acc
        if ad2 == 0.0:
            return v_nd, int(it), False, True
        theta = -gd / ad2
        for j in range(n):
            if d[j] < 0.0:
                tb = -v[j] / d[j]
                if tb < theta:
                    theta = tb
        for j in range(n):
            t = v[j] + theta * d[j]
            v[j] = t if t > 0.0 else 0.0
        for i in range(m):
            acc = 0.0
            for j in range(n):
                acc += am[i, j] * v[j]
            r[i] = acc - bm[i]
        for j in range(n):
            acc = 0.0
            for i in range(m):
                acc += am[i, j] * r[i]
            g[j] = acc
    return v_nd, int(max_iters), False, False
