"""Classical comparison solvers behind one result type.

Six methods: plain inversion (INV), Tikhonov regularization (TR), cyclic
Kaczmarz projections (ART), the Lawson-Hanson active-set method (NNLS), the
simultaneous multiplicative reconstruction technique (SMART) and residual
norm steepest descent restricted to the non-negative cone (MRNSD).  INV, TR
and ART ignore the sign constraint; the other three respect it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .linalg import (
    DimensionMismatchError,
    as_matrix,
    as_vector,
    invert,
    solve_spd,
)
from .trnnc import SolveResult

__all__ = [
    "BaselineConfig",
    "inv_solve",
    "tikhonov_solve",
    "art_solve",
    "nnls_solve",
    "smart_solve",
    "mrnsd_solve",
]


@dataclass(frozen=True)
class BaselineConfig:
    """Knobs for the baseline solvers.

    alpha_tr regularizes TR; art_sweeps/art_relax drive ART; iters caps
    SMART and MRNSD; tol is the residual/KKT stopping tolerance shared by
    NNLS, SMART and MRNSD.
    """

    alpha_tr: float = 1e-13
    art_sweeps: int = 1000
    art_relax: float = 1.0
    iters: int = 10000
    tol: float = 1e-10

    def __post_init__(self):
        if not self.alpha_tr > 0:
            raise ValueError(f"alpha_tr must be > 0, got {self.alpha_tr}")
        if self.art_sweeps < 1:
            raise ValueError(f"art_sweeps must be >= 1, got {self.art_sweeps}")
        if not 0.0 < self.art_relax < 2.0:
            raise ValueError(f"art_relax must be in (0, 2), got {self.art_relax}")
        if self.iters < 1:
            raise ValueError(f"iters must be >= 1, got {self.iters}")
        if not self.tol > 0:
            raise ValueError(f"tol must be > 0, got {self.tol}")


def _check_system(a, b):
    a = as_matrix(a)
    b = as_vector(b)
    if b.shape[0] != a.shape[0]:
        raise DimensionMismatchError(
            f"matrix has {a.shape[0]} rows but right-hand side has length {b.shape[0]}"
        )
    return a, b


def _result(a, b, v, iterations, converged) -> SolveResult:
    return SolveResult(
        v=v,
        iterations=int(iterations),
        converged=bool(converged),
        residual_norm=float(np.linalg.norm(a @ v - b)),
    )


def inv_solve(a, b) -> SolveResult:
    """v = A^{-1} b.  Square systems only; no sign constraint."""
    a, b = _check_system(a, b)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(
            f"matrix is {a.shape[0]}x{a.shape[1]}, inversion needs a square matrix"
        )
    return _result(a, b, invert(a) @ b, 1, True)


def tikhonov_solve(a, b, alpha: float) -> SolveResult:
    """Solve (A^T A + alpha*I) v = A^T b.  No sign constraint."""
    a, b = _check_system(a, b)
    if not alpha > 0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    n = a.shape[1]
    s = a.T @ a
    s[np.diag_indices(n)] += alpha
    return _result(a, b, solve_spd(s, a.T @ b), 1, True)


def art_solve(a, b, cfg: BaselineConfig | None = None) -> SolveResult:
    """Cyclic Kaczmarz row projections from v = 0.

    Runs cfg.art_sweeps full passes with relaxation cfg.art_relax.  No sign
    constraint.  Rows must be nonzero.
    """
    a, b = _check_system(a, b)
    if cfg is None:
        cfg = BaselineConfig()
    row_norms = np.einsum("ij,ij->i", a, a)
    if (row_norms == 0.0).any():
        raise ValueError(f"row {int(np.argmin(row_norms)) + 1} of the matrix is zero")
    v = _kernels.kernels.art_sweeps(a, b, cfg.art_relax, cfg.art_sweeps)
    return _result(a, b, v, cfg.art_sweeps, True)


def nnls_solve(a, b, cfg: BaselineConfig | None = None) -> SolveResult:
    """Lawson-Hanson active-set method for min ||Av - b|| over v >= 0.

    Maintains a passive set of strictly positive variables.  Each outer
    iteration admits the most violating gradient component, solves the
    unconstrained least-squares subproblem on the passive set, and walks
    back along the line toward feasibility if the subproblem solution left
    the cone.  Terminates when the KKT conditions hold at cfg.tol:
    v >= 0, the gradient w = A^T(b - Av) is <= tol on the zero set and
    |w| <= tol on the support.  The problem is convex, so the terminal
    iterate is a global minimizer.

    An outer-iteration safeguard of 3n loops returns converged=False
    instead of cycling forever.
    """
    a, b = _check_system(a, b)
    if cfg is None:
        cfg = BaselineConfig()
    m, n = a.shape
    max_outer = 3 * n
    eps = np.finfo(float).eps

    passive = np.zeros(n, dtype=bool)
    v = np.zeros(n)
    w = a.T @ b  # gradient at v = 0
    outer = 0
    while (~passive).any() and np.max(w[~passive]) > cfg.tol:
        outer += 1
        if outer > max_outer:
            return _result(a, b, v, outer - 1, False)
        grow = np.where(~passive, w, -np.inf)
        passive[int(np.argmax(grow))] = True
        while True:
            z = np.zeros(n)
            z[passive] = np.linalg.lstsq(a[:, passive], b, rcond=None)[0]
            if z[passive].min() > 0.0:
                v = z
                break
            # feasibility line search toward z; the blocking variable
            # lands exactly on zero and leaves the passive set
            blocking = passive & (z <= 0.0)
            steps = v[blocking] / (v[blocking] - z[blocking])
            t = float(np.min(steps))
            v = v + t * (z - v)
            passive &= v > eps
            v[~passive] = 0.0
        w = a.T @ (b - a @ v)
    return _result(a, b, v, outer, True)


def smart_solve(a, b, cfg: BaselineConfig | None = None) -> SolveResult:
    """Multiplicative simultaneous reconstruction from v = all ones.

    v_j <- v_j * exp( (1/s_j) * sum_i A_ij * ln(b_i / (Av)_i) ) with s_j the
    column sums.  Needs an entrywise non-negative matrix with no zero
    column, strictly positive data b and a strictly positive starting
    product A v0; iterates stay entrywise positive.
    """
    a, b = _check_system(a, b)
    if cfg is None:
        cfg = BaselineConfig()
    if (a < 0).any():
        raise ValueError("SMART requires an entrywise non-negative matrix")
    if (b <= 0).any():
        raise ValueError("SMART requires positive data")
    if (a.sum(axis=0) == 0.0).any():
        raise ValueError("SMART requires a matrix with no zero columns")
    v0 = np.ones(a.shape[1])
    if (a @ v0 <= 0).any():
        raise ValueError("SMART requires A v0 to be entrywise positive")
    v, iters, converged = _kernels.kernels.smart_iterate(a, b, v0, cfg.iters, cfg.tol)
    return _result(a, b, v, iters, converged)


def mrnsd_solve(a, b, cfg: BaselineConfig | None = None) -> SolveResult:
    """Residual norm steepest descent on the non-negative cone, from ones.

    Descent direction d = -v * g with g = A^T(Av - b); the step is the
    unconstrained minimizer capped by the nearest boundary crossing, so
    iterates stay entrywise >= 0 throughout.  Stops when ||v*g|| falls to
    cfg.tol relative to its initial value; ||Ad|| = 0 with a nonzero
    gradient reports stagnation via converged=False.
    """
    a, b = _check_system(a, b)
    if cfg is None:
        cfg = BaselineConfig()
    v0 = np.ones(a.shape[1])
    v, iters, converged, _stagnated = _kernels.kernels.mrnsd_iterate(
        a, b, v0, cfg.iters, cfg.tol
    )
    return _result(a, b, v, iters, converged)
