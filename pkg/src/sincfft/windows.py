"""Window functions for the gridding transforms.

Every window derives from an even shape function ``omega`` supported on
``[-1, 1]`` with ``omega(0) = 1``, nonincreasing on ``[0, 1]``, whose
Fourier transform

    omega_hat(v) = 2 * int_0^1 omega(x) cos(2 pi v x) dx

is positive and decreasing on the band ``[0, m/(2 sigma)]``.  The window
actually applied on a grid of ``n_grid`` points with cut-off ``m`` is the
dilation ``phi(t) = omega(n_grid * t / m)`` with transform
``phi_hat(v) = (m / n_grid) * omega_hat(m * v / n_grid)``.

Four shapes are provided:

``sinh``
    ``sinh(beta sqrt(1 - x^2)) / sinh(beta)`` with
    ``beta = 2 pi m (1 - 1/(2 sigma))``; closed-form transform.
``bspline``
    centered cardinal B-spline of order ``2m``; closed-form transform.
``algebraic``
    ``(1 - x^2)^(beta - 1/2)`` with ``beta = 3m``; transform by quadrature.
``kaiser-bessel``
    ``I_0(beta sqrt(1 - x^2)) / I_0(beta)`` on the open interval, zero at
    ``|x| >= 1`` (same ``beta`` as the sinh shape); transform by quadrature.
"""

from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

from .errors import ParameterError
from .special import bessel_j1, cardinal_bspline, sinc

_KINDS = ("sinh", "bspline", "algebraic", "kaiser-bessel")

_SIGMA_TOL = 1e-9


def window_kinds():
    """Names of the available window shapes."""
    return _KINDS


@dataclass(frozen=True)
class WindowSpec:
    """Immutable description of one window: shape, cut-off, oversampling, grid.

    Parameters
    ----------
    kind : str
        One of :func:`window_kinds`.
    m : int
        Cut-off; the window is supported on ``2m`` grid points.
    sigma : float
        Oversampling factor (> 1).  The ``sinh`` shape additionally
        requires ``5/4 <= sigma <= 2``, the ``algebraic`` shape
        ``sigma > pi/3``.
    n_grid : int
        Positive even grid length with ``2m <= n_grid``.
    """

    kind: str
    m: int
    sigma: float
    n_grid: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ParameterError(
                f"unknown window kind {self.kind!r}; expected one of {_KINDS}")
        if not isinstance(self.m, (int, np.integer)) or self.m < 2:
            raise ParameterError("window cut-off m must be an integer >= 2")
        if not self.sigma > 1.0:
            raise ParameterError("window oversampling sigma must be > 1")
        if self.kind == "sinh" and not (
                1.25 - _SIGMA_TOL <= self.sigma <= 2.0 + _SIGMA_TOL):
            raise ParameterError(
                f"sinh window requires 5/4 <= sigma <= 2, got sigma={self.sigma}")
        if self.kind == "algebraic" and not self.sigma > np.pi / 3.0:
            raise ParameterError(
                f"algebraic window requires sigma > pi/3, got sigma={self.sigma}")
        if (not isinstance(self.n_grid, (int, np.integer))
                or self.n_grid <= 0 or self.n_grid % 2):
            raise ParameterError("n_grid must be a positive even integer")
        if 2 * self.m > self.n_grid:
            raise ParameterError(
                f"window needs 2*m <= n_grid, got m={self.m}, n_grid={self.n_grid}")

    @property
    def beta(self):
        """Shape parameter; ``None`` for the B-spline shape."""
        if self.kind in ("sinh", "kaiser-bessel"):
            return 2.0 * np.pi * self.m * (1.0 - 1.0 / (2.0 * self.sigma))
        if self.kind == "algebraic":
            return 3.0 * self.m
        return None


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def omega_eval(spec, x):
    """Evaluate the shape function ``omega`` of ``spec`` at ``x``."""
    arr, scalar = _as_array(x)
    inside = np.abs(arr) < 1.0
    s = np.sqrt(np.maximum(0.0, 1.0 - arr * arr))
    if spec.kind == "sinh":
        b = spec.beta
        # sinh(b*s)/sinh(b) = e^{b(s-1)} (1 - e^{-2bs}) / (1 - e^{-2b});
        # stable for large b
        val = np.exp(b * (s - 1.0)) * (-np.expm1(-2.0 * b * s)) / (-np.expm1(-2.0 * b))
    elif spec.kind == "bspline":
        val = (cardinal_bspline(2 * spec.m, spec.m * arr)
               / cardinal_bspline(2 * spec.m, 0.0))
    elif spec.kind == "algebraic":
        val = s ** (2.0 * spec.beta - 1.0)
    else:  # kaiser-bessel
        b = spec.beta
        val = _sp.i0e(b * s) / _sp.i0e(b) * np.exp(b * (s - 1.0))
    out = np.where(inside, val, 0.0)
    return float(out) if scalar else out


def _bessel_ratio_series(w):
    # I1(z)/z as a power series in w = z^2; the same series evaluated at
    # negative w gives J1(z)/z with w = -z^2, so one expression covers the
    # neighborhood of w = 0 from both sides.
    return 0.5 + w / 16.0 + w * w / 384.0 + w * w * w / 18432.0


def omega_hat_eval(spec, v):
    """Fourier transform ``omega_hat`` of the shape function at ``v``.

    Closed forms for the ``sinh`` and ``bspline`` shapes; adaptive
    Gauss-Legendre quadrature of ``2 int_0^1 omega(x) cos(2 pi v x) dx``
    for the other shapes.
    """
    arr, scalar = _as_array(v)
    if spec.kind == "sinh":
        b = spec.beta
        one_m = -np.expm1(-2.0 * b)  # 1 - e^{-2 beta}
        # pi*beta/sinh(beta), written without evaluating sinh
        pref = 2.0 * np.pi * b * np.exp(-b) / one_m
        w = b * b - 4.0 * np.pi * np.pi * arr * arr
        res = np.empty_like(np.atleast_1d(w))
        wf = np.atleast_1d(w)
        near = np.abs(wf) <= 1e-3
        res[near] = pref * _bessel_ratio_series(wf[near])
        pos = wf > 1e-3
        z = np.sqrt(wf[pos])
        # pref * I1(z)/z, with I1(z) = i1e(z) e^z folded into the prefactor
        res[pos] = 2.0 * np.pi * b * _sp.i1e(z) * np.exp(z - b) / (one_m * z)
        neg = wf < -1e-3
        zn = np.sqrt(-wf[neg])
        res[neg] = pref * bessel_j1(zn) / zn
        return float(res[0]) if scalar else res.reshape(np.shape(w))
    if spec.kind == "bspline":
        b0 = cardinal_bspline(2 * spec.m, 0.0)
        out = np.asarray(sinc(np.pi * arr / spec.m), dtype=float) ** (2 * spec.m)
        out = out / (spec.m * b0)
        return float(out) if scalar else out
    out = _cos_transform(lambda x: omega_eval(spec, x), np.atleast_1d(arr))
    return float(out[0]) if scalar else out.reshape(arr.shape)


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)

_QUAD_TOL = 1e-12
_QUAD_MAX_EVALS = 2 ** 16


def _cos_transform(omega_fn, v, tol=_QUAD_TOL, max_evals=_QUAD_MAX_EVALS):
    """``2 * int_0^1 omega(x) cos(2 pi v x) dx`` for a vector of ``v``.

    Gauss-Legendre panels refined by interval bisection until the worst
    entry changes by less than ``tol`` times the panel width, with a hard
    cap on the number of abscissa evaluations.
    """
    v = np.asarray(v, dtype=float).ravel()
    evals = 0

    def panel(lo, hi):
        x = 0.5 * (hi - lo) * _GL_NODES + 0.5 * (hi + lo)
        fw = omega_fn(x) * (0.5 * (hi - lo) * _GL_WEIGHTS)
        return np.cos(2.0 * np.pi * v[:, None] * x[None, :]) @ fw

    total = np.zeros(v.shape)
    work = [(0.0, 1.0, panel(0.0, 1.0))]
    evals += _GL_NODES.size
    while work:
        lo, hi, est = work.pop()
        mid = 0.5 * (lo + hi)
        left = panel(lo, mid)
        right = panel(mid, hi)
        evals += 2 * _GL_NODES.size
        if evals > max_evals:
            raise ArithmeticError(
                "window transform quadrature did not converge within "
                f"{max_evals} evaluations")
        if np.max(np.abs(left + right - est)) <= tol * (hi - lo):
            total += left + right
        else:
            work.append((lo, mid, left))
            work.append((mid, hi, right))
    return 2.0 * total


def phi_eval(spec, t):
    """Grid window ``phi(t) = omega(n_grid * t / m)``."""
    return omega_eval(spec, np.asarray(t, dtype=float) * (spec.n_grid / spec.m))


def phi_hat_eval(spec, v):
    """Transform of the grid window: ``(m/n_grid) omega_hat(m v / n_grid)``."""
    return (spec.m / spec.n_grid) * omega_hat_eval(
        spec, np.asarray(v, dtype=float) * (spec.m / spec.n_grid))
