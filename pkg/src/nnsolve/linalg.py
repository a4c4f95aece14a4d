"""Dense double-precision matrix/vector kernels shared by all solvers.

Everything operates on plain numpy arrays (float64, C order).  Matrices are
2-D, vectors 1-D; entries must be finite.  All functions are pure and safe to
call concurrently.
"""
from __future__ import annotations

import numpy as np
import scipy.linalg

__all__ = [
    "DimensionMismatchError",
    "NotPositiveDefiniteError",
    "SingularMatrixError",
    "as_matrix",
    "as_vector",
    "mat_vec",
    "solve_spd",
    "invert",
    "singular_extremes",
]

# max relative asymmetry accepted by solve_spd
SYMMETRY_RTOL = 1e-12


class DimensionMismatchError(ValueError):
    """Operand shapes are incompatible."""


class NotPositiveDefiniteError(ValueError):
    """A symmetric solve hit a non-positive pivot."""


class SingularMatrixError(ValueError):
    """LU factorization found an exactly singular matrix."""


def as_matrix(a) -> np.ndarray:
    """Validate and return `a` as a 2-D float64 C-contiguous array."""
    m = np.ascontiguousarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"matrix must be at least 1x1, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite")
    return m


def as_vector(a) -> np.ndarray:
    """Validate and return `a` as a 1-D float64 contiguous array."""
    v = np.ascontiguousarray(a, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got ndim={v.ndim}")
    if v.size < 1:
        raise ValueError("vector must have at least one entry")
    if not np.isfinite(v).all():
        raise ValueError("vector entries must be finite")
    return v


def mat_vec(a, x) -> np.ndarray:
    """Matrix-vector product y = A x."""
    a = as_matrix(a)
    x = as_vector(x)
    if x.shape[0] != a.shape[1]:
        raise DimensionMismatchError(
            f"matrix has {a.shape[1]} columns but vector has length {x.shape[0]}"
        )
    return a @ x


def solve_spd(s, rhs) -> np.ndarray:
    """Solve S x = rhs for symmetric positive definite S via Cholesky.

    Raises NotPositiveDefiniteError when the factorization hits a
    non-positive pivot, and DimensionMismatchError / ValueError for shape
    or symmetry violations.
    """
    s = as_matrix(s)
    rhs = as_vector(rhs)
    n = s.shape[0]
    if s.shape[1] != n:
        raise DimensionMismatchError(f"matrix is {s.shape[0]}x{s.shape[1]}, not square")
    if rhs.shape[0] != n:
        raise DimensionMismatchError(
            f"matrix has {n} rows but right-hand side has length {rhs.shape[0]}"
        )
    scale = np.abs(s).max()
    if scale > 0 and np.abs(s - s.T).max() > SYMMETRY_RTOL * scale:
        raise ValueError("matrix is not symmetric")
    try:
        factor = scipy.linalg.cho_factor(s, lower=True, check_finite=False)
    except scipy.linalg.LinAlgError as exc:
        raise NotPositiveDefiniteError("matrix is not positive definite") from exc
    return scipy.linalg.cho_solve(factor, rhs, check_finite=False)


def invert(a) -> np.ndarray:
    """Matrix inverse via LU factorization with partial pivoting.

    No accuracy promise for ill-conditioned input; the result reflects the
    conditioning of the factorization.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"matrix is {a.shape[0]}x{a.shape[1]}, not square")
    try:
        return np.linalg.inv(a)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError("matrix is exactly singular") from exc


def singular_extremes(a) -> tuple[float, float]:
    """Largest and smallest singular values of `a`.

    Values are those of the computed double-precision SVD: for matrices whose
    true smallest singular value lies below machine precision the returned
    minimum only reflects numerical rank, so callers should treat values
    <= 1e-12 as numerically singular.
    """
    a = as_matrix(a)
    sv = np.linalg.svd(a, compute_uv=False)
    return float(sv[0]), float(sv[-1])
