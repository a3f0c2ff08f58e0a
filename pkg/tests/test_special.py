"""Bessel, B-spline, and sinc helpers against independent references."""

import numpy as np
import pytest
from scipy.integrate import quad

from sincfft.errors import ParameterError
from sincfft.special import bessel_i1, bessel_j1, cardinal_bspline, sinc

# reference values computed independently (series / library cross-check)
# and frozen before the wrappers were written
I1_REFERENCE = {
    1.0: 0.565159103992485,
    10.0: 2670.988303701255,
}
J1_AT_ONE = 0.440050585744934


def test_i1_frozen_values():
    for x, ref in I1_REFERENCE.items():
        assert bessel_i1(x) == pytest.approx(ref, rel=1e-14)


def test_i1_small_argument_series():
    # I1(x) = x/2 + x^3/16 + x^5/384 + O(x^7)
    for x in (1e-4, 1e-3, 1e-2):
        series = x / 2.0 + x ** 3 / 16.0 + x ** 5 / 384.0
        assert bessel_i1(x) == pytest.approx(series, rel=1e-12)


@pytest.mark.parametrize("x", [0.5, 2.0, 10.0, 40.0])
def test_i1_integral_representation(x):
    # I1(x) = (1/pi) int_0^pi exp(x cos t) cos t dt
    val, err = quad(lambda t: np.exp(x * np.cos(t)) * np.cos(t), 0.0, np.pi,
                    limit=200)
    assert bessel_i1(x) == pytest.approx(val / np.pi, rel=1e-11)


def test_i1_rejects_negative():
    with pytest.raises(ParameterError):
        bessel_i1(-1.0)


def test_i1_overflow_signals():
    with pytest.raises(OverflowError):
        bessel_i1(1e4)


def test_j1_frozen_value_and_zero():
    assert bessel_j1(1.0) == pytest.approx(J1_AT_ONE, rel=1e-14)
    # first positive zero of J1 lies in (3.8316, 3.8318)
    assert bessel_j1(3.8316) > 0.0
    assert bessel_j1(3.8318) < 0.0


def test_j1_odd():
    x = np.linspace(0.1, 8.0, 23)
    assert np.allclose(bessel_j1(-x), -bessel_j1(x), rtol=0, atol=1e-15)


def test_bspline_known_center_values():
    # centered linear B-spline peaks at 1, the cubic one at 2/3
    assert cardinal_bspline(2, 0.0) == pytest.approx(1.0, abs=1e-15)
    assert cardinal_bspline(4, 0.0) == pytest.approx(2.0 / 3.0, abs=1e-14)


@pytest.mark.parametrize("order", [2, 3, 4, 8, 12])
def test_bspline_partition_properties(order):
    x = np.linspace(-order / 2 - 1, order / 2 + 1, 4001)
    vals = cardinal_bspline(order, x)
    # even, nonnegative, supported on [-order/2, order/2], unit integral
    assert np.allclose(vals, cardinal_bspline(order, -x), atol=1e-14)
    assert np.all(vals >= -1e-15)
    outside = np.abs(x) > order / 2 + 1e-12
    assert np.max(np.abs(vals[outside])) == 0.0
    integral = np.trapezoid(vals, x)
    assert integral == pytest.approx(1.0, abs=5e-7)


def test_bspline_shifted_sum_is_one():
    # sums of integer translates of the cardinal B-spline equal 1
    x = np.linspace(-0.5, 0.5, 101)
    total = sum(cardinal_bspline(4, x - k) for k in range(-4, 5))
    assert np.allclose(total, 1.0, atol=1e-14)


def test_sinc_values():
    assert sinc(0.0) == 1.0
    assert sinc(1.0) == pytest.approx(0.841470984807897, rel=1e-14)
    assert sinc(np.pi) == pytest.approx(0.0, abs=1e-15)
    y = np.array([0.0, 1e-12, np.pi, 2 * np.pi])
    out = sinc(y)
    assert out[0] == 1.0 and abs(out[1] - 1.0) < 1e-12
