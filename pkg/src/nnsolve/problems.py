"""Benchmark problem family: mirrored Hilbert matrices, six ground-truth
profiles, a reproducible noise model and the relative-error metric.

The base matrix is A = (H + H~)/2 where H is the Hilbert matrix
H_ij = 1/(i+j-1) and H~ its 180-degree rotation; A is symmetric,
persymmetric, entrywise positive and severely ill-conditioned.
Overdetermined and underdetermined variants take the leading 2N/3 columns
or rows.  Right-hand sides are b = A v0 + noise with
noise_i = noise_scale * (rnd_i - 0.5) * ||A v0||_2 and rnd drawn from an
explicitly specified 64-bit generator, so a given seed reproduces b
bit-for-bit.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .io import read_matrix_csv, read_vector_csv, write_matrix_csv, write_vector_csv
from .linalg import DimensionMismatchError, as_matrix, as_vector, mat_vec

__all__ = [
    "SHAPES",
    "SplitMix64",
    "TestProblem",
    "hilbert",
    "mirror",
    "test_matrix",
    "test_vector",
    "perturb",
    "rho",
    "perturbation_experiment",
    "save_problem",
    "load_problem",
]

SHAPES = ("square", "over", "under")

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator producing uniforms in [0, 1).

    State update: s += 0x9E3779B97F4A7C15; output mixing:
    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
    z *= 0x94D049BB133111EB; z ^= z >> 31.  Uniform doubles take the top
    53 bits, (z >> 11) * 2**-53.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, n: int) -> np.ndarray:
        return np.array(
            [(self.next_uint64() >> 11) * 2.0 ** -53 for _ in range(n)]
        )


@dataclass(frozen=True)
class TestProblem:
    """A benchmark instance: matrix, ground truth and noisy data."""

    name: str
    a: np.ndarray
    v0: np.ndarray
    p_clean: np.ndarray
    b: np.ndarray
    seed: int
    noise_scale: float


def hilbert(n: int) -> np.ndarray:
    """Hilbert matrix H_ij = 1/(i+j-1), indices starting at 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    i = np.arange(1, n + 1, dtype=np.float64)
    return 1.0 / (i[:, None] + i[None, :] - 1.0)


def mirror(h) -> np.ndarray:
    """180-degree rotation: out_ij = H_{N-i+1, N-j+1}."""
    h = as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise DimensionMismatchError(
            f"matrix is {h.shape[0]}x{h.shape[1]}, mirroring needs a square matrix"
        )
    return np.ascontiguousarray(h[::-1, ::-1])


def test_matrix(n: int, shape: str = "square") -> np.ndarray:
    """Benchmark matrix: (H + mirror(H))/2, optionally sliced.

    "over" keeps the leading 2n/3 columns (n x 2n/3), "under" the leading
    2n/3 rows; both require n divisible by 3.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if shape not in SHAPES:
        raise ValueError(f"unknown shape {shape!r}; valid shapes: {', '.join(SHAPES)}")
    h = hilbert(n)
    a = 0.5 * (h + mirror(h))
    if shape == "square":
        return a
    if n % 3 != 0:
        raise ValueError(f"sliced shapes need n divisible by 3, got n={n}")
    k = 2 * n // 3
    if shape == "over":
        return np.ascontiguousarray(a[:, :k])
    return np.ascontiguousarray(a[:k, :])


def test_vector(test_id: int, n: int = 30) -> np.ndarray:
    """Ground-truth profiles 1..6 over 1-based indices i = 1..n.

    1: unit spike at i = 15; 2: indicator of 10 <= i <= 20; 3: its
    complement; 4: triangle i/15 up to i = 15 then 2 - i/15 (clamped at 0
    for n > 30); 5: Gaussian exp(-(i-15)^2/20); 6: 1 + 0.5 sin(2 pi i / 15).
    """
    if n < 20:
        raise ValueError(f"n must be >= 20, got {n}")
    i = np.arange(1, n + 1, dtype=np.float64)
    if test_id == 1:
        return (i == 15).astype(np.float64)
    if test_id == 2:
        return ((i >= 10) & (i <= 20)).astype(np.float64)
    if test_id == 3:
        return ((i < 10) | (i > 20)).astype(np.float64)
    if test_id == 4:
        return np.maximum(np.where(i <= 15, i / 15.0, 2.0 - i / 15.0), 0.0)
    if test_id == 5:
        return np.exp(-((i - 15.0) ** 2) / 20.0)
    if test_id == 6:
        return 1.0 + 0.5 * np.sin(2.0 * np.pi * i / 15.0)
    raise ValueError(f"unknown test id {test_id}; valid ids: 1..6")


def perturb(a, v0, noise_scale: float = 1e-10, seed: int = 0,
            name: str = "custom") -> TestProblem:
    """Assemble a TestProblem with b = A v0 + noise.

    noise_i = noise_scale * (rnd_i - 0.5) * ||A v0||_2, one rnd per matrix
    row, drawn from SplitMix64(seed).
    """
    a = as_matrix(a)
    v0 = as_vector(v0)
    if noise_scale < 0:
        raise ValueError(f"noise_scale must be >= 0, got {noise_scale}")
    p_clean = mat_vec(a, v0)
    rnd = SplitMix64(seed).uniform(a.shape[0])
    b = p_clean + noise_scale * (rnd - 0.5) * np.linalg.norm(p_clean)
    return TestProblem(
        name=name, a=a, v0=v0, p_clean=p_clean, b=b,
        seed=seed, noise_scale=noise_scale,
    )


def rho(v0, v) -> float:
    """Relative reconstruction error ||v0 - v||_2 / ||v0||_2."""
    v0 = as_vector(v0)
    v = as_vector(v)
    if v.shape[0] != v0.shape[0]:
        raise DimensionMismatchError(
            f"vectors have lengths {v0.shape[0]} and {v.shape[0]}"
        )
    denom = float(np.linalg.norm(v0))
    if denom == 0.0:
        raise ValueError("rho is undefined for a zero reference vector")
    return float(np.linalg.norm(v0 - v)) / denom


def perturbation_experiment(solver, a, p, delta_scale: float,
                            seed: int) -> tuple[float, float]:
    """Observed solution sensitivity next to the sign-aware bound.

    Solves for p and for p + delta_p, with delta_p built like the benchmark
    noise at delta_scale.  Returns (||v_pert - v|| / ||v||, s_max / m) for
    side-by-side reporting; the second value is the a-priori bound on the
    relative solution change for solvers that keep v >= 0.
    """
    from .conditioning import condition_report

    a = as_matrix(a)
    p = as_vector(p)
    base = solver(a, p)
    rnd = SplitMix64(seed).uniform(a.shape[0])
    delta_p = delta_scale * (rnd - 0.5) * np.linalg.norm(p)
    perturbed = solver(a, p + delta_p)
    norm_base = float(np.linalg.norm(base.v))
    if norm_base == 0.0:
        raise ValueError("base solution is zero; relative change is undefined")
    observed = float(np.linalg.norm(perturbed.v - base.v)) / norm_base
    report = condition_report(a)
    return observed, report.cond_nonneg


def save_problem(problem: TestProblem, outdir, shape: str = "square") -> None:
    """Persist a problem as A.csv, v0.csv, b.csv and meta.json."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    write_matrix_csv(problem.a, out / "A.csv")
    write_vector_csv(problem.v0, out / "v0.csv")
    write_vector_csv(problem.b, out / "b.csv")
    meta = {
        "name": problem.name,
        "seed": problem.seed,
        "noise_scale": problem.noise_scale,
        "shape": shape,
        "rows": int(problem.a.shape[0]),
        "cols": int(problem.a.shape[1]),
    }
    (out / "meta.json").write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")


def load_problem(indir) -> TestProblem:
    """Load a problem directory written by save_problem."""
    src = Path(indir)
    meta = json.loads((src / "meta.json").read_text(encoding="utf-8"))
    a = read_matrix_csv(src / "A.csv")
    v0 = read_vector_csv(src / "v0.csv")
    b = read_vector_csv(src / "b.csv")
    return TestProblem(
        name=meta["name"],
        a=a,
        v0=v0,
        p_clean=mat_vec(a, v0),
        b=b,
        seed=int(meta["seed"]),
        noise_scale=float(meta["noise_scale"]),
    )
