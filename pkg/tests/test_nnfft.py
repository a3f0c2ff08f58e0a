"""Two-stage nonequispaced transform: geometry, accuracy, internal consistency."""

import numpy as np
import pytest

from sincfft import bounds
from sincfft.direct import nndft_direct
from sincfft.errors import ParameterError
from sincfft.nnfft import (NnfftGeometry, nnfft_plan, nnfft_trafo,
                           rescale_frequencies)


def test_geometry_reference_case():
    geo = NnfftGeometry.from_parameters(128, 64, 48, 2.0, 2.0, 4, 4)
    assert geo.N1 == 256
    assert geo.N1 + 2 * geo.m1 == 264
    assert geo.N2 == 528
    assert geo.a == pytest.approx(33 / 32, abs=0)
    assert geo.sigma1 == 2.0
    assert geo.sigma2 == 2.0


def test_geometry_rounds_fine_grid_up_to_even():
    # sigma2 * (N1 + 2 m1) = 1.5 * 262 = 393 is odd -> grid becomes 394
    geo = NnfftGeometry.from_parameters(128, 10, 10, 2.0, 1.5, 3, 3)
    assert geo.N1 == 256
    assert geo.N2 == 394
    assert geo.N2 % 2 == 0
    assert geo.sigma2 == pytest.approx(394 / 262, rel=1e-15)
    assert geo.sigma2_nominal == 1.5
    assert geo.sigma2 >= geo.sigma2_nominal


def test_geometry_rejects():
    with pytest.raises(ParameterError):
        NnfftGeometry.from_parameters(10, 8, 8, 1.5, 2.0, 4, 4)  # sigma1*N odd
    with pytest.raises(ParameterError):
        NnfftGeometry.from_parameters(127, 8, 8, 1.5, 2.0, 4, 4)  # non-integer grid
    with pytest.raises(ParameterError):
        NnfftGeometry.from_parameters(128, 8, 8, 1.0, 2.0, 4, 4)  # sigma1 <= 1
    with pytest.raises(ParameterError):
        NnfftGeometry.from_parameters(128, 0, 8, 2.0, 2.0, 4, 4)
    with pytest.raises(ParameterError):
        # second-stage stencil exceeds the alias-free margin (1 - 1/sigma1) N2
        NnfftGeometry.from_parameters(16, 8, 8, 1.25, 1.03125, 2, 3)


def test_rescale_reference_case():
    v = np.array([-0.5, -0.1, 0.0, 0.37, 0.5])
    n_star, v_star = rescale_frequencies(100, v, 2.0, 4)
    assert n_star == 104
    assert np.allclose(v_star, v * 100 / 104, atol=0)
    # the physical frequencies N v are preserved exactly
    assert np.allclose(n_star * v_star, 100 * v, rtol=0, atol=1e-13)
    # and the rescaled data fits the admissible band of the new bandwidth
    a_star = 1 + 2 * 4 / (2.0 * n_star)
    assert np.max(np.abs(v_star)) <= 1 / (2 * a_star)


def test_rescale_then_transform_matches_direct():
    rng = np.random.default_rng(31)
    N, M1, M2 = 60, 25, 30
    v = rng.uniform(-0.5, 0.5, M1)
    x = rng.uniform(-0.5, 0.5, M2)
    f = rng.uniform(-1, 1, M1) + 1j * rng.uniform(-1, 1, M1)
    n_star, v_star = rescale_frequencies(N, v, 2.0, 6)
    plan = nnfft_plan(n_star, v_star, x, m1=6, m2=6)
    out = nnfft_trafo(plan, f)
    ref = nndft_direct(f, v, x, N)
    assert np.max(np.abs(out - ref)) <= 1e-8 * np.sum(np.abs(f))


@pytest.mark.parametrize("sigma", [1.25, 1.5, 2.0])
@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_error_dominated_by_bound(sigma, m):
    rng = np.random.default_rng(1000 * m + int(4 * sigma))
    N, M1, M2 = 64, 40, 50
    geo = NnfftGeometry.from_parameters(N, M1, M2, sigma, sigma, m, m)
    v = rng.uniform(-0.5 / geo.a, 0.5 / geo.a, M1)
    x = rng.uniform(-0.5, 0.5, M2)
    f = rng.uniform(-1, 1, M1) + 1j * rng.uniform(-1, 1, M1)
    plan = nnfft_plan(N, v, x, sigma1=sigma, sigma2=sigma, m1=m, m2=m)
    err = np.max(np.abs(nnfft_trafo(plan, f) - nndft_direct(f, v, x, N)))
    assert err <= bounds.bound_nnfft_sinh(N, sigma, sigma, m, m) * np.sum(np.abs(f))


def test_single_frequency_wave():
    v = np.array([0.21])
    x = np.linspace(-0.5, 0.5, 33)
    plan = nnfft_plan(32, v, x, m1=6, m2=6)
    out = nnfft_trafo(plan, np.array([1.0 + 0j]))
    ref = np.exp(-2j * np.pi * 32 * v[0] * x)
    assert np.max(np.abs(out - ref)) < 1e-9


def _slow_reference(plan, f):
    """Re-run the three stages with explicit loops and an O(K N2) DFT."""
    geo = plan.geometry
    K = geo.N1 + 2 * geo.m1
    g = np.zeros(K, dtype=complex)
    for k in range(geo.M1):
        for t in range(2 * geo.m1):
            g[plan.spread_idx[k, t]] += f[k] * plan.spread_val[k, t]
    g /= geo.N1
    ghat = g / plan.hat2
    ell = np.arange(K) - K // 2
    t = np.arange(geo.N2)
    h = np.exp(-2j * np.pi * np.outer(t, ell) / geo.N2) @ ghat / geo.N2
    out = np.zeros(geo.M2, dtype=complex)
    for j in range(geo.M2):
        for s in range(2 * geo.m2):
            out[j] += h[plan.gather_idx[j, s]] * plan.gather_val[j, s]
    return out / plan.hat1


def test_vectorized_stages_match_loop_reference():
    rng = np.random.default_rng(77)
    N, M1, M2 = 16, 9, 11
    geo = NnfftGeometry.from_parameters(N, M1, M2, 2.0, 2.0, 3, 3)
    v = rng.uniform(-0.5 / geo.a, 0.5 / geo.a, M1)
    x = rng.uniform(-0.5, 0.5, M2)
    f = rng.uniform(-1, 1, M1) + 1j * rng.uniform(-1, 1, M1)
    plan = nnfft_plan(N, v, x, sigma1=2.0, sigma2=2.0, m1=3, m2=3)
    fast = nnfft_trafo(plan, f)
    slow = _slow_reference(plan, f)
    assert np.max(np.abs(fast - slow)) < 1e-12 * np.sum(np.abs(f))


def test_plan_rejects_out_of_band_frequencies():
    geo = NnfftGeometry.from_parameters(32, 4, 4, 2.0, 2.0, 4, 4)
    v_bad = np.array([0.5])  # legal for rescaled data only
    assert 0.5 > 0.5 / geo.a
    with pytest.raises(ParameterError, match="rescale_frequencies"):
        nnfft_plan(32, v_bad, np.zeros(4))
    with pytest.raises(ParameterError):
        nnfft_plan(32, np.zeros(4), np.array([0.7]))


def test_odd_point_counts_are_allowed():
    # node/frequency counts have no parity constraint
    plan = nnfft_plan(16, np.array([0.1, -0.2, 0.3]), np.array([0.4, -0.4]),
                      m1=3, m2=3)
    out = nnfft_trafo(plan, np.ones(3, dtype=complex))
    assert out.shape == (2,)
