"""Benchmark runner: assembles problems, runs solvers, persists records.

Solver identifiers form a stable schema: inv, tr, art, nnls, smart, mrnsd
and trnnc are implemented; gmres, mer and autoregnn are reserved so that
third-party results stay column-compatible, and are rejected with a
"not implemented" message.  Records are ordered by test id then solver id,
and every run is deterministic for a fixed seed (each test problem draws
its noise from seed + test_id).
"""
from __future__ import annotations

import dataclasses
import json
import logging
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .baselines import (
    BaselineConfig,
    art_solve,
    inv_solve,
    mrnsd_solve,
    nnls_solve,
    smart_solve,
    tikhonov_solve,
)
from .io import format_real
from .problems import SHAPES, TestProblem, perturb, rho, test_matrix, test_vector
from .trnnc import TrnncConfig, trnnc_solve

__all__ = [
    "SOLVER_IDS",
    "RESERVED_SOLVER_IDS",
    "CONSTRAINED_SOLVER_IDS",
    "CSV_HEADER",
    "BenchRecord",
    "BenchConfig",
    "BenchRun",
    "problem_seed",
    "run_benchmark",
    "run_benchmark_full",
    "scrub_seconds",
    "emit_csv",
    "parse_csv",
    "write_results_json",
]

log = logging.getLogger(__name__)

SOLVER_IDS = ("art", "inv", "mrnsd", "nnls", "smart", "tr", "trnnc")
RESERVED_SOLVER_IDS = ("gmres", "mer", "autoregnn")
CONSTRAINED_SOLVER_IDS = ("trnnc", "nnls", "smart", "mrnsd")
TEST_IDS = (1, 2, 3, 4, 5, 6)

CSV_HEADER = "problem,shape,solver,n,rho,iterations,converged,seconds,seed,min_v"


@dataclass(frozen=True)
class BenchRecord:
    """One (problem, solver) outcome row."""

    problem: str
    shape: str
    solver: str
    n: int
    rho: float
    iterations: int
    converged: bool
    seconds: float
    seed: int
    min_v: float


@dataclass(frozen=True)
class BenchConfig:
    """Full description of a benchmark run."""

    n: int = 30
    shape: str = "square"
    tests: tuple[int, ...] = TEST_IDS
    solvers: tuple[str, ...] = SOLVER_IDS
    trnnc: TrnncConfig = field(default_factory=TrnncConfig)
    baseline: BaselineConfig = field(default_factory=BaselineConfig)
    noise_scale: float = 1e-10
    seed: int = 42
    emit_plots: bool = False

    def __post_init__(self):
        if self.n < 20:
            raise ValueError(f"n must be >= 20, got {self.n}")
        if self.shape not in SHAPES:
            raise ValueError(
                f"unknown shape {self.shape!r}; valid shapes: {', '.join(SHAPES)}"
            )
        if not self.tests:
            raise ValueError("at least one test id is required")
        for t in self.tests:
            if t not in TEST_IDS:
                raise ValueError(f"unknown test id {t}; valid ids: 1..6")
        if not self.solvers:
            raise ValueError("at least one solver id is required")
        for s in self.solvers:
            if s in RESERVED_SOLVER_IDS:
                raise ValueError(
                    f"solver {s!r} is reserved in the schema but not implemented"
                )
            if s not in SOLVER_IDS:
                raise ValueError(
                    f"unknown solver {s!r}; valid ids: {', '.join(SOLVER_IDS)}"
                )
        if self.noise_scale < 0:
            raise ValueError(f"noise_scale must be >= 0, got {self.noise_scale}")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "shape": self.shape,
            "tests": list(self.tests),
            "solvers": list(self.solvers),
            "trnnc": {
                "alpha": self.trnnc.alpha,
                "omega": self.trnnc.omega,
                "eps_stop": self.trnnc.eps_stop,
                "max_iters": self.trnnc.max_iters,
            },
            "baseline": dataclasses.asdict(self.baseline),
            "noise_scale": self.noise_scale,
            "seed": self.seed,
            "emit_plots": self.emit_plots,
        }


@dataclass
class BenchRun:
    """Records plus the retained inputs/solutions needed for plotting."""

    records: list[BenchRecord]
    problems: dict[str, TestProblem]
    solutions: dict[tuple[str, str], np.ndarray]
    timings: dict[str, float]


def problem_seed(base_seed: int, test_id: int) -> int:
    """Noise seed for one test problem (shared by `run` and `gen`)."""
    return base_seed + test_id


def _dispatch(solver: str, problem: TestProblem, cfg: BenchConfig):
    a, b = problem.a, problem.b
    if solver == "inv":
        return inv_solve(a, b)
    if solver == "tr":
        return tikhonov_solve(a, b, cfg.baseline.alpha_tr)
    if solver == "art":
        return art_solve(a, b, cfg.baseline)
    if solver == "nnls":
        return nnls_solve(a, b, cfg.baseline)
    if solver == "smart":
        return smart_solve(a, b, cfg.baseline)
    if solver == "mrnsd":
        return mrnsd_solve(a, b, cfg.baseline)
    if solver == "trnnc":
        return trnnc_solve(a, b, cfg.trnnc)
    raise ValueError(f"unknown solver {solver!r}")


def run_benchmark_full(cfg: BenchConfig) -> BenchRun:
    """Run every (test, solver) pair and retain solutions for plotting.

    A solver failure produces a record with converged=False and a rho of
    +inf instead of aborting the run.  inv is skipped (with a notice) for
    non-square shapes.
    """
    a = test_matrix(cfg.n, cfg.shape)
    square = a.shape[0] == a.shape[1]
    records: list[BenchRecord] = []
    problems: dict[str, TestProblem] = {}
    solutions: dict[tuple[str, str], np.ndarray] = {}
    timings: dict[str, float] = {}

    for test_id in sorted(cfg.tests):
        name = f"test{test_id}"
        problem = perturb(
            a,
            test_vector(test_id, a.shape[1]),
            noise_scale=cfg.noise_scale,
            seed=problem_seed(cfg.seed, test_id),
            name=name,
        )
        problems[name] = problem
        for solver in sorted(cfg.solvers):
            if solver == "inv" and not square:
                log.warning("skipping inv for shape %r: matrix is not square", cfg.shape)
                continue
            start = time.perf_counter()
            try:
                result = _dispatch(solver, problem, cfg)
                seconds = time.perf_counter() - start
                err = rho(problem.v0, result.v)
                record = BenchRecord(
                    problem=name,
                    shape=cfg.shape,
                    solver=solver,
                    n=cfg.n,
                    rho=err,
                    iterations=result.iterations,
                    converged=result.converged,
                    seconds=seconds,
                    seed=problem.seed,
                    min_v=min(0.0, float(result.v.min())),
                )
                solutions[(name, solver)] = result.v
            except Exception as exc:
                seconds = time.perf_counter() - start
                log.warning("solver %s failed on %s: %s", solver, name, exc)
                record = BenchRecord(
                    problem=name,
                    shape=cfg.shape,
                    solver=solver,
                    n=cfg.n,
                    rho=math.inf,
                    iterations=0,
                    converged=False,
                    seconds=seconds,
                    seed=problem.seed,
                    min_v=0.0,
                )
            records.append(record)
            timings[f"{name}/{solver}"] = record.seconds
    return BenchRun(records=records, problems=problems, solutions=solutions,
                    timings=timings)


def run_benchmark(cfg: BenchConfig) -> list[BenchRecord]:
    """Records only; see run_benchmark_full for the retained solutions."""
    return run_benchmark_full(cfg).records


def scrub_seconds(records: list[BenchRecord]) -> list[BenchRecord]:
    """Copies with seconds zeroed, so persisted outputs are byte-stable.

    Wall-clock measurements vary between runs; the CLI persists scrubbed
    records (keeping the measured timings in results.json under "timings")
    so identical flags yield byte-identical results.csv.
    """
    return [dataclasses.replace(r, seconds=0.0) for r in records]


def _record_to_row(r: BenchRecord) -> str:
    return ",".join(
        [
            r.problem,
            r.shape,
            r.solver,
            str(r.n),
            format_real(r.rho),
            str(r.iterations),
            "true" if r.converged else "false",
            format_real(r.seconds),
            str(r.seed),
            format_real(r.min_v),
        ]
    )


def emit_csv(records: list[BenchRecord], path) -> None:
    """Write records as UTF-8, LF-terminated CSV with the fixed header.

    Reals carry 17 significant digits; a failed solve's rho appears as the
    literal `inf`.
    """
    if not records:
        raise ValueError("no records to write")
    text = "\n".join([CSV_HEADER] + [_record_to_row(r) for r in records]) + "\n"
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def parse_csv(path) -> list[BenchRecord]:
    """Read back a results.csv written by emit_csv."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path} does not start with the benchmark CSV header")
    records = []
    for line in lines[1:]:
        if not line.strip():
            continue
        (problem, shape, solver, n, err, iters, converged, seconds, seed,
         min_v) = line.split(",")
        records.append(
            BenchRecord(
                problem=problem,
                shape=shape,
                solver=solver,
                n=int(n),
                rho=float(err),
                iterations=int(iters),
                converged=converged == "true",
                seconds=float(seconds),
                seed=int(seed),
                min_v=float(min_v),
            )
        )
    return records


def write_results_json(cfg: BenchConfig, records: list[BenchRecord],
                       timings: dict[str, float], path) -> None:
    """Persist {config, records, timings} as JSON."""

    def enc(x):
        if isinstance(x, float) and not math.isfinite(x):
            return repr(x)
        return x

    payload = {
        "config": cfg.to_dict(),
        "records": [
            {k: enc(v) for k, v in dataclasses.asdict(r).items()} for r in records
        ],
        "timings": timings,
    }
    path = Path(path)
    try:
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
