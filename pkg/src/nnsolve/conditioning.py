"""Conditioning diagnostics for non-negative linear systems.

For an entrywise non-negative matrix the smallest value of ||Ax|| over
non-negative unit vectors, m(A), equals the smallest Euclidean column norm
and is attained at a canonical basis vector.  m(A) is usually far larger than
the smallest singular value, so the effective condition ratio of a solver
that respects the sign constraint, s_max/m, can be many orders of magnitude
smaller than the classical s_max/s_min.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, singular_extremes

__all__ = ["ConditioningReport", "m_lower", "condition_report"]


@dataclass(frozen=True)
class ConditioningReport:
    """Spectral and non-negativity-aware conditioning summary.

    `k_star` is the 1-based index of the column with the smallest norm.
    """

    s_max: float
    s_min: float
    m: float
    k_star: int
    cond_classical: float
    cond_nonneg: float

    def to_dict(self) -> dict:
        return {
            "s_max": self.s_max,
            "s_min": self.s_min,
            "m": self.m,
            "k_star": self.k_star,
            "cond_classical": self.cond_classical,
            "cond_nonneg": self.cond_nonneg,
        }

    def to_json(self) -> str:
        # JSON has no literal for infinities; encode non-finite values as strings.
        def enc(x):
            if isinstance(x, float) and not math.isfinite(x):
                return repr(x)
            return x

        return json.dumps({k: enc(v) for k, v in self.to_dict().items()})


def m_lower(a) -> tuple[float, int]:
    """Smallest column norm m(A) and its 1-based arg min.

    Requires an entrywise non-negative matrix; only then is the column-norm
    formula the true minimum of ||Ax|| over the non-negative unit sphere.
    Ties resolve to the smallest index.
    """
    a = as_matrix(a)
    if (a < 0).any():
        raise ValueError("m(A) requires an entrywise non-negative matrix")
    norms = np.linalg.norm(a, axis=0)
    k = int(np.argmin(norms))
    return float(norms[k]), k + 1


def _ratio(num: float, den: float) -> float:
    return num / den if den > 0 else math.inf


def condition_report(a) -> ConditioningReport:
    """Assemble a ConditioningReport for an entrywise non-negative matrix."""
    a = as_matrix(a)
    s_max, s_min = singular_extremes(a)
    m, k_star = m_lower(a)
    return ConditioningReport(
        s_max=s_max,
        s_min=s_min,
        m=m,
        k_star=k_star,
        cond_classical=_ratio(s_max, s_min),
        cond_nonneg=_ratio(s_max, m),
    )
