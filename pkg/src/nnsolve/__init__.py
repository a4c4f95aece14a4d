"""Non-negative solvers for ill-conditioned dense linear systems.

The package centers on TRNNC (Tikhonov regularization with a non-negativity
constraint), which squares the unknown, v = u*u, and iterates a relaxed
Tikhonov-regularized linearization.  Classical baselines (inversion,
Tikhonov, Kaczmarz sweeps, Lawson-Hanson NNLS, SMART, MRNSD), conditioning
diagnostics for sign-constrained systems, a mirrored-Hilbert benchmark
family and a CLI harness round out the library.

Iteration-heavy kernels run on a compiled backend when the extension built;
`nnsolve.active_backend()` reports which one is live and NNSOLVE_BACKEND
overrides the choice.
"""

from ._kernels import active_backend
from .baselines import (
    BaselineConfig,
    art_solve,
    inv_solve,
    mrnsd_solve,
    nnls_solve,
    smart_solve,
    tikhonov_solve,
)
from .bench import (
    BenchConfig,
    BenchRecord,
    emit_csv,
    run_benchmark,
    run_benchmark_full,
)
from .conditioning import ConditioningReport, condition_report, m_lower
from .linalg import (
    DimensionMismatchError,
    NotPositiveDefiniteError,
    SingularMatrixError,
    invert,
    mat_vec,
    singular_extremes,
    solve_spd,
)
from .problems import (
    SplitMix64,
    TestProblem,
    hilbert,
    mirror,
    perturb,
    perturbation_experiment,
    rho,
    test_matrix,
    test_vector,
)
from .trnnc import (
    AlphaTooSmallError,
    SolveResult,
    TrnncConfig,
    TrnncState,
    trnnc_solve,
    trnnc_stationarity_residual,
    trnnc_step,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_backend",
    "AlphaTooSmallError",
    "BaselineConfig",
    "BenchConfig",
    "BenchRecord",
    "ConditioningReport",
    "DimensionMismatchError",
    "NotPositiveDefiniteError",
    "SingularMatrixError",
    "SolveResult",
    "SplitMix64",
    "TestProblem",
    "TrnncConfig",
    "TrnncState",
    "art_solve",
    "condition_report",
    "emit_csv",
    "hilbert",
    "inv_solve",
    "invert",
    "m_lower",
    "mat_vec",
    "mirror",
    "mrnsd_solve",
    "nnls_solve",
    "perturb",
    "perturbation_experiment",
    "rho",
    "run_benchmark",
    "run_benchmark_full",
    "singular_extremes",
    "smart_solve",
    "solve_spd",
    "test_matrix",
    "test_vector",
    "tikhonov_solve",
    "trnnc_solve",
    "trnnc_stationarity_residual",
    "trnnc_step",
]
