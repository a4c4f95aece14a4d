"""Cross-checks between the compiled kernel core and the pure fallback."""

import subprocess
import sys

import numpy as np
import pytest

from nnsolve._kernels import _pure, active_backend

try:
    from nnsolve._kernels import _core
except ImportError:
    _core = None

needs_core = pytest.mark.skipif(_core is None, reason="compiled core not built")


def _problem(seed, m=12, n=9):
    rng = np.random.default_rng(seed)
    a = rng.uniform(0.1, 1.0, size=(m, n)) + np.eye(m, n)
    v_true = rng.uniform(0.5, 2.0, size=n)
    return np.ascontiguousarray(a), a @ v_true


def test_active_backend_reports_a_valid_name():
    assert active_backend() in ("pure", "compiled")


def test_backend_forcing_via_environment():
    import os

    for forced in ("pure", "compiled") if _core is not None else ("pure",):
        out = subprocess.run(
            [sys.executable, "-c", "import nnsolve; print(nnsolve.active_backend())"],
            capture_output=True,
            text=True,
            env={**os.environ, "NNSOLVE_BACKEND": forced},
            check=True,
        )
        assert out.stdout.strip() == forced


@needs_core
def test_trnnc_iterate_backends_agree_wellconditioned():
    a, p = _problem(1)
    u0 = np.ones(a.shape[1])
    up, kp, cp, sp = _pure.trnnc_iterate(a, p, u0, 1e-13, 0.5, 1e-10, 400)
    uc, kc, cc, sc = _core.trnnc_iterate(a, p, u0, 1e-13, 0.5, 1e-10, 400)
    assert (kp, cp) == (kc, cc)
    np.testing.assert_allclose(uc, up, rtol=1e-9, atol=1e-12)
    np.testing.assert_allclose(sc, sp, rtol=1e-6, atol=1e-12)


@needs_core
def test_trnnc_iterate_compiled_preserves_zero_absorption_and_signs():
    a, p = _problem(2)
    u0 = np.ones(a.shape[1])
    u0[3] = 0.0
    u, _, _, _ = _core.trnnc_iterate(a, p, u0, 1e-13, 0.5, 1e-12, 50)
    assert u[3] == 0.0
    u0 = np.full(a.shape[1], 1.3)
    u_pos, *_ = _core.trnnc_iterate(a, p, u0, 1e-13, 0.5, 1e-12, 50)
    u_neg, *_ = _core.trnnc_iterate(a, p, -u0, 1e-13, 0.5, 1e-12, 50)
    np.testing.assert_array_equal(u_pos * u_pos, u_neg * u_neg)


@needs_core
def test_art_backends_agree():
    a, p = _problem(3)
    vp = _pure.art_sweeps(a, p, 1.0, 200)
    vc = _core.art_sweeps(a, p, 1.0, 200)
    np.testing.assert_allclose(vc, vp, rtol=1e-10, atol=1e-13)


@needs_core
def test_smart_backends_agree():
    a, p = _problem(4)
    v0 = np.ones(a.shape[1])
    vp, kp, cp = _pure.smart_iterate(a, p, v0, 500, 1e-10)
    vc, kc, cc = _core.smart_iterate(a, p, v0, 500, 1e-10)
    assert (kp, cp) == (kc, cc)
    np.testing.assert_allclose(vc, vp, rtol=1e-9)


@needs_core
def test_mrnsd_backends_agree():
    a, p = _problem(5)
    v0 = np.ones(a.shape[1])
    vp, kp, cp, gp = _pure.mrnsd_iterate(a, p, v0, 500, 1e-10)
    vc, kc, cc, gc = _core.mrnsd_iterate(a, p, v0, 500, 1e-10)
    assert (kp, cp, gp) == (kc, cc, gc)
    np.testing.assert_allclose(vc, vp, rtol=1e-8, atol=1e-13)


def test_mrnsd_kernel_starting_at_minimizer_converges_immediately():
    b = np.array([2.0, 3.0, 0.5])
    v, iters, converged, stagnated = _pure.mrnsd_iterate(np.eye(3), b, b.copy(), 100, 1e-10)
    assert converged and not stagnated
    assert iters == 0
    np.testing.assert_array_equal(v, b)


@needs_core
def test_mrnsd_core_starting_at_minimizer_converges_immediately():
    b = np.array([2.0, 3.0, 0.5])
    v, iters, converged, stagnated = _core.mrnsd_iterate(np.eye(3), b, b.copy(), 100, 1e-10)
    assert converged and not stagnated
    assert iters == 0
    np.testing.assert_array_equal(v, b)


@needs_core
def test_trnnc_iterate_backends_comparable_on_illconditioned_benchmark():
    # At cond ~ 1/alpha the two Cholesky routines round differently and the
    # trajectories drift apart, but both must stay in the same quality
    # regime for the default iteration budget.
    from nnsolve.problems import perturb, rho, test_matrix, test_vector

    a = test_matrix(30)
    prob = perturb(a, test_vector(5), 1e-10, 47)
    u0 = np.ones(30)
    up, *_ = _pure.trnnc_iterate(a, prob.b, u0, 1e-13, 0.5, 1e-8, 30)
    uc, *_ = _core.trnnc_iterate(a, prob.b, u0, 1e-13, 0.5, 1e-8, 30)
    r_pure = rho(prob.v0, up * up)
    r_core = rho(prob.v0, uc * uc)
    assert r_pure < 0.1 and r_core < 0.1
