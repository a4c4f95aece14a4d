"""TRNNC: Tikhonov-regularized iteration for non-negative linear systems.

The sign constraint is removed by substituting v = u*u elementwise, which
turns A v = p into the quadratic system A diag(u) u = p.  That system is
attacked by simple iteration: freeze diag(u) at the current iterate, solve
the Tikhonov-regularized normal equations

    (diag(u) A^T A diag(u) + alpha*I) w = diag(u) A^T p

and relax, u <- omega*u + (1-omega)*w.  The iteration stops when the u-step
norm falls below `eps_stop` or after `max_iters` steps.  The returned
solution v = u*u is non-negative by construction, whatever happens.

Practical behavior on ill-conditioned systems: the iteration is
semiconvergent.  The reconstruction error typically drops for a few dozen
steps and then drifts into a bounded oscillating regime in which the step
norm stagnates around the inner-solve noise floor, so the step-norm stop
rarely fires at tight tolerances.  The default `max_iters` is deliberately
small to stop inside the good regime; raise it for well-conditioned systems,
which do reach the fixed point.  A component u_j can settle at zero only when
its residual gradient is O(alpha); components pulled hard against the
constraint keep oscillating instead of converging (see `step_norms`).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .linalg import DimensionMismatchError, NotPositiveDefiniteError, as_matrix, as_vector
from ._kernels import _pure

__all__ = [
    "AlphaTooSmallError",
    "TrnncConfig",
    "TrnncState",
    "SolveResult",
    "trnnc_step",
    "trnnc_solve",
    "trnnc_stationarity_residual",
]


class AlphaTooSmallError(RuntimeError):
    """The regularized inner system lost positive definiteness."""


@dataclass(frozen=True)
class TrnncConfig:
    """Iteration parameters.

    alpha > 0 regularizes the inner solve; 0 < omega < 1 relaxes the
    update; the iteration stops when the u-step norm reaches eps_stop.
    u0 = None starts from all ones (strictly positive, scale-neutral and
    clear of the absorbing zero state); a custom u0 must have no zero
    entries, since any exactly-zero component stays zero forever.
    """

    alpha: float = 1e-13
    omega: float = 0.5
    eps_stop: float = 1e-8
    max_iters: int = 30
    u0: np.ndarray | None = None

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be > 0, got {self.alpha}")
        if not 0.0 < self.omega < 1.0:
            raise ValueError(f"omega must be in (0, 1), got {self.omega}")
        if not self.eps_stop > 0:
            raise ValueError(f"eps_stop must be > 0, got {self.eps_stop}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.u0 is not None:
            u0 = as_vector(self.u0)
            if (u0 == 0.0).any():
                raise ValueError("custom u0 must have no zero entries")
            object.__setattr__(self, "u0", u0)


@dataclass
class TrnncState:
    """Current iterate u and its iteration counter."""

    u: np.ndarray
    k: int = 0


@dataclass
class SolveResult:
    """Outcome of a solver run.

    `residual_norm` is ||A v - b||_2 for the right-hand side the solver was
    given; `step_norms` records the per-iteration update norms where the
    solver has them (TRNNC), else stays empty.
    """

    v: np.ndarray
    iterations: int
    converged: bool
    residual_norm: float
    step_norms: list[float] = field(default_factory=list)


def _initial_u(a: np.ndarray, cfg: TrnncConfig) -> np.ndarray:
    n = a.shape[1]
    if cfg.u0 is None:
        return np.ones(n)
    if cfg.u0.shape[0] != n:
        raise DimensionMismatchError(
            f"matrix has {n} columns but u0 has length {cfg.u0.shape[0]}"
        )
    return cfg.u0.copy()


def trnnc_step(a, p, state: TrnncState, cfg: TrnncConfig) -> TrnncState:
    """One relaxed iteration of the regularized map.

    Builds S = diag(u) A^T A diag(u) + alpha*I, solves S w = diag(u) A^T p
    and returns the state with u <- omega*u + (1-omega)*w.
    """
    a = as_matrix(a)
    p = as_vector(p)
    u = as_vector(state.u)
    if p.shape[0] != a.shape[0]:
        raise DimensionMismatchError(
            f"matrix has {a.shape[0]} rows but p has length {p.shape[0]}"
        )
    if u.shape[0] != a.shape[1]:
        raise DimensionMismatchError(
            f"matrix has {a.shape[1]} columns but u has length {u.shape[0]}"
        )
    g = a.T @ a
    c = a.T @ p
    try:
        u_next = _pure.trnnc_step_arrays(g, c, u, cfg.alpha, cfg.omega)
    except NotPositiveDefiniteError as exc:
        raise AlphaTooSmallError("alpha too small for this iterate") from exc
    return TrnncState(u=u_next, k=state.k + 1)


def trnnc_solve(a, p, cfg: TrnncConfig | None = None) -> SolveResult:
    """Iterate from u0 until the step norm reaches eps_stop or max_iters.

    Hitting max_iters is reported through converged=False, not an error;
    the capped iterate is still returned.  Every component of the returned
    v is >= 0 exactly.
    """
    a = as_matrix(a)
    p = as_vector(p)
    if cfg is None:
        cfg = TrnncConfig()
    if p.shape[0] != a.shape[0]:
        raise DimensionMismatchError(
            f"matrix has {a.shape[0]} rows but p has length {p.shape[0]}"
        )
    u0 = _initial_u(a, cfg)
    try:
        u, iters, converged, step_norms = _kernels.kernels.trnnc_iterate(
            a, p, u0, cfg.alpha, cfg.omega, cfg.eps_stop, cfg.max_iters
        )
    except NotPositiveDefiniteError as exc:
        raise AlphaTooSmallError("alpha too small for this iterate") from exc
    v = u * u
    return SolveResult(
        v=v,
        iterations=int(iters),
        converged=bool(converged),
        residual_norm=float(np.linalg.norm(a @ v - p)),
        step_norms=[float(s) for s in step_norms],
    )


def trnnc_stationarity_residual(a, p, result: SolveResult, alpha: float,
                                tau: float) -> float:
    """Fixed-point certificate for a TRNNC result.

    At an exact fixed point every component with u_j != 0 satisfies
    (A^T(Av - p))_j = -alpha, so this returns
    max over {j : v_j > tau} of |(A^T(Av - p))_j + alpha|,
    or 0.0 when no component exceeds tau.  Small values certify a
    stationary point of the regularized problem.
    """
    a = as_matrix(a)
    p = as_vector(p)
    v = as_vector(result.v)
    grad = a.T @ (a @ v - p)
    active = v > tau
    if not active.any():
        return 0.0
    return float(np.max(np.abs(grad[active] + alpha)))
