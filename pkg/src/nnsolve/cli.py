"""Command-line benchmark harness.

Subcommands:
  run   execute a benchmark and write results.csv, results.json and
        (with --plots) reconstruction SVGs into --out
  cond  print the conditioning report of a test matrix as JSON
  gen   write one serialized test problem (A.csv, v0.csv, b.csv, meta.json)

Exit codes: 0 on success, 1 on configuration errors, 2 on I/O errors.

results.csv is byte-identical across repeated runs with the same flags:
persisted records carry seconds=0 and the measured wall-clock timings live
in results.json under "timings".
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .baselines import BaselineConfig
from .bench import (
    CSV_HEADER,
    BenchConfig,
    emit_csv,
    problem_seed,
    run_benchmark_full,
    scrub_seconds,
    write_results_json,
)
from .conditioning import condition_report
from .problems import SHAPES, perturb, save_problem, test_matrix, test_vector
from .svgplot import emit_plots
from .trnnc import TrnncConfig

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; the harness reserves 2 for I/O
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _str_list(text: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip())


def _build_parser() -> _Parser:
    parser = _Parser(prog="nnsolve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the benchmark")
    run.add_argument("--n", type=int, default=30)
    run.add_argument("--shape", default="square", choices=SHAPES)
    run.add_argument("--tests", type=_int_list, default=(1, 2, 3, 4, 5, 6),
                     help="comma-separated test ids, e.g. 1,2,5")
    run.add_argument("--solvers", type=_str_list,
                     default=("inv", "tr", "art", "nnls", "smart", "mrnsd", "trnnc"),
                     help="comma-separated solver ids")
    run.add_argument("--alpha", type=float, default=TrnncConfig.alpha)
    run.add_argument("--omega", type=float, default=TrnncConfig.omega)
    run.add_argument("--eps", type=float, default=TrnncConfig.eps_stop)
    run.add_argument("--max-iters", type=int, default=TrnncConfig.max_iters)
    run.add_argument("--alpha-tr", type=float, default=BaselineConfig.alpha_tr)
    run.add_argument("--art-sweeps", type=int, default=BaselineConfig.art_sweeps)
    run.add_argument("--art-relax", type=float, default=BaselineConfig.art_relax)
    run.add_argument("--iters", type=int, default=BaselineConfig.iters,
                     help="iteration cap for smart/mrnsd")
    run.add_argument("--tol", type=float, default=BaselineConfig.tol)
    run.add_argument("--noise", type=float, default=1e-10)
    run.add_argument("--seed", type=int, default=42)
    run.add_argument("--out", default="results")
    run.add_argument("--plots", action="store_true")

    cond = sub.add_parser("cond", help="print the conditioning report as JSON")
    cond.add_argument("--n", type=int, default=30)
    cond.add_argument("--shape", default="square", choices=SHAPES)

    gen = sub.add_parser("gen", help="write one serialized test problem")
    gen.add_argument("--n", type=int, default=30)
    gen.add_argument("--shape", default="square", choices=SHAPES)
    gen.add_argument("--test", type=int, default=1)
    gen.add_argument("--noise", type=float, default=1e-10)
    gen.add_argument("--seed", type=int, default=42)
    gen.add_argument("--out", required=True)
    return parser


def _cmd_run(args) -> int:
    cfg = BenchConfig(
        n=args.n,
        shape=args.shape,
        tests=args.tests,
        solvers=args.solvers,
        trnnc=TrnncConfig(
            alpha=args.alpha,
            omega=args.omega,
            eps_stop=args.eps,
            max_iters=args.max_iters,
        ),
        baseline=BaselineConfig(
            alpha_tr=args.alpha_tr,
            art_sweeps=args.art_sweeps,
            art_relax=args.art_relax,
            iters=args.iters,
            tol=args.tol,
        ),
        noise_scale=args.noise,
        seed=args.seed,
        emit_plots=args.plots,
    )
    run = run_benchmark_full(cfg)
    records = scrub_seconds(run.records)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    if records:
        emit_csv(records, outdir / "results.csv")
    else:
        # e.g. `run --shape under --solvers inv`: every pair was skipped
        (outdir / "results.csv").write_text(CSV_HEADER + "\n", encoding="utf-8")
    write_results_json(cfg, records, run.timings, outdir / "results.json")
    if args.plots:
        emit_plots(records, run.problems, run.solutions, outdir)
    print(f"wrote {len(records)} records to {outdir / 'results.csv'}")
    return 0


def _cmd_cond(args) -> int:
    report = condition_report(test_matrix(args.n, args.shape))
    print(report.to_json())
    return 0


def _cmd_gen(args) -> int:
    a = test_matrix(args.n, args.shape)
    v0 = test_vector(args.test, a.shape[1])
    problem = perturb(
        a,
        v0,
        noise_scale=args.noise,
        seed=problem_seed(args.seed, args.test),
        name=f"test{args.test}",
    )
    save_problem(problem, args.out, shape=args.shape)
    print(f"wrote problem test{args.test} to {args.out}")
    return 0


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s: %(message)s",
                        level=logging.INFO)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "cond":
            return _cmd_cond(args)
        return _cmd_gen(args)
    except SystemExit:
        raise
    except OSError as exc:
        print(f"nnsolve: I/O error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"nnsolve: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
