"""Gridding NFFT: accuracy against the exact polynomial, adjoint exactness."""

import numpy as np
import pytest

from sincfft import bounds
from sincfft.direct import ndft_direct
from sincfft.errors import ParameterError, PositivityError
from sincfft.nfft import nfft_adjoint, nfft_plan, nfft_trafo


def _random_instance(rng, N, M):
    x = rng.uniform(-0.5, 0.5, M)
    c = rng.uniform(-1, 1, N) + 1j * rng.uniform(-1, 1, N)
    return x, c


@pytest.mark.parametrize("m", [2, 4, 6])
def test_trafo_error_below_window_bound(m):
    rng = np.random.default_rng(100 + m)
    N, M = 64, 129
    x, c = _random_instance(rng, N, M)
    plan = nfft_plan(N, x, sigma=2.0, m=m)
    err = np.max(np.abs(nfft_trafo(plan, c) - ndft_direct(c, x)))
    assert err <= bounds.bound_sinh_E(m, 2.0) * np.sum(np.abs(c))


def test_spread_rows_have_fixed_width():
    plan = nfft_plan(16, np.array([0.0, 0.24, -0.5]), sigma=2.0, m=4)
    assert plan.spread_idx.shape == (3, 8)
    assert plan.spread_val.shape == (3, 8)
    assert np.all((plan.spread_idx >= 0) & (plan.spread_idx < plan.n_over))
    assert np.all(plan.spread_val >= 0.0)
    # a node exactly on a grid point still gets 2m entries; the last one
    # sits on the support boundary and carries the window's exact zero
    row = plan.spread_val[0]
    assert row[-1] == 0.0 and np.count_nonzero(row) == 7


def test_adjoint_matches_conjugate_sum():
    rng = np.random.default_rng(17)
    N, M = 12, 29
    x = rng.uniform(-0.5, 0.5, M)
    y = rng.standard_normal(M) + 1j * rng.standard_normal(M)
    plan = nfft_plan(N, x, sigma=2.0, m=6)
    out = nfft_adjoint(plan, y)
    k = np.arange(N) - N // 2
    ref = np.array([np.sum(y * np.exp(-2j * np.pi * ki * x)) for ki in k])
    assert np.max(np.abs(out - ref)) <= bounds.bound_sinh_E(6, 2.0) * np.sum(np.abs(y))


@pytest.mark.parametrize("seed", range(5))
def test_adjoint_inner_product_identity(seed):
    # <A c, y> == <c, A* y> holds to rounding error by construction
    rng = np.random.default_rng(seed)
    N, M = 32, 47
    x, c = _random_instance(rng, N, M)
    y = rng.standard_normal(M) + 1j * rng.standard_normal(M)
    plan = nfft_plan(N, x, sigma=2.0, m=4)
    lhs = np.vdot(y, nfft_trafo(plan, c))
    rhs = np.vdot(nfft_adjoint(plan, y), c)
    scale = np.linalg.norm(c) * np.linalg.norm(y)
    assert abs(lhs - rhs) <= 1e-13 * scale


def test_periodic_wrap_at_half():
    c = np.random.default_rng(2).standard_normal(16) + 0j
    left = nfft_trafo(nfft_plan(16, np.array([-0.5])), c)
    right = nfft_trafo(nfft_plan(16, np.array([0.5])), c)
    assert abs(left[0] - right[0]) < 1e-12 * np.sum(np.abs(c))


def test_other_windows_also_work():
    rng = np.random.default_rng(3)
    N, M = 32, 40
    x, c = _random_instance(rng, N, M)
    for window in ("bspline", "kaiser-bessel"):
        plan = nfft_plan(N, x, sigma=2.0, m=6, window=window)
        err = np.max(np.abs(nfft_trafo(plan, c) - ndft_direct(c, x)))
        assert err < 1e-5 * np.sum(np.abs(c))


def test_plan_rejects():
    with pytest.raises(ParameterError):
        nfft_plan(15, np.zeros(3))  # odd degree
    with pytest.raises(ParameterError):
        nfft_plan(16, np.zeros(3), sigma=1.3)  # sigma*N not an even integer
    with pytest.raises(ParameterError):
        nfft_plan(16, np.array([0.6]))  # node out of range
    with pytest.raises(ParameterError):
        nfft_plan(8, np.zeros(3), sigma=2.0, m=6)  # stencil exceeds grid half
    with pytest.raises(ParameterError):
        nfft_trafo(nfft_plan(16, np.zeros(3)), np.ones(8, dtype=complex))


def test_positivity_guard_trips():
    # a B-spline transform has zeros past the first sinc lobe; a degree
    # pushed to the grid edge with tiny oversampling must be rejected
    with pytest.raises((PositivityError, ParameterError)):
        nfft_plan(64, np.zeros(2), sigma=1.0, m=4, window="bspline")
