"""Plain-text CSV persistence for matrices and vectors.

One matrix row per line, comma separated, 17 significant digits so values
round-trip exactly through text.  Vectors are written one entry per line.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .linalg import as_matrix, as_vector

__all__ = [
    "format_real",
    "write_matrix_csv",
    "read_matrix_csv",
    "write_vector_csv",
    "read_vector_csv",
]


def format_real(x: float) -> str:
    """Render a double with 17 significant digits (round-trip safe)."""
    return format(float(x), ".17g")


def write_matrix_csv(a, path) -> None:
    a = as_matrix(a)
    lines = [",".join(format_real(x) for x in row) for row in a]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_matrix_csv(path) -> np.ndarray:
    rows = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            rows.append([float(x) for x in line.split(",")])
    return as_matrix(np.asarray(rows))


def write_vector_csv(v, path) -> None:
    v = as_vector(v)
    Path(path).write_text(
        "\n".join(format_real(x) for x in v) + "\n", encoding="utf-8"
    )


def read_vector_csv(path) -> np.ndarray:
    values = [
        float(line)
        for line in Path(path).read_text(encoding="utf-8").splitlines()
        if line.strip()
    ]
    return as_vector(np.asarray(values))
