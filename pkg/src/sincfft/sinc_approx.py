"""Exponential-sum surrogate for the sinc kernel.

Clenshaw-Curtis quadrature of ``(1/2) int_{-1}^{1} e^{-pi i N t x} dt``
turns ``sinc(pi N x)`` into a short exponential sum

    sinc(pi N x)  ~=  sum_{k=0}^{n} w_k e^{-pi i N z_k x},  x in [-1, 1],

on the Chebyshev points ``z_k = cos(k pi / n)`` with positive weights
``w_k`` summing to one.  The error decays like ``e^{-N (nu - C)}`` in the
oversampling ``nu = n / N`` once ``nu`` exceeds the constant
``C ~= 3.692`` (see :mod:`sincfft.bounds`).

Weights come either from the direct cosine-sum formula (any ``n >= 2``) or
from a single orthogonal DCT-I (``n`` a power of two >= 4).
"""

import csv
from dataclasses import dataclass

import numpy as np

from . import fft_core
from .errors import ParameterError
from .nfft import nfft_adjoint, nfft_plan
from .special import sinc

_DOMAIN_TOL = 1e-12


def _eps_boundary(n, idx):
    # half-weight sqrt(2)/2 at the two boundary indices, 1 inside
    return np.where((idx == 0) | (idx == n), np.sqrt(0.5), 1.0)


@dataclass(frozen=True)
class CcQuadrature:
    """Chebyshev points and Clenshaw-Curtis weights for one size ``n``.

    ``points[k] = cos(k pi / n)`` for ``k = 0..n`` (descending from 1 to
    -1, exactly antisymmetric), ``weights`` positive with unit sum.
    """

    n: int
    points: np.ndarray
    weights: np.ndarray


def _chebyshev_points(n):
    k = np.arange(n // 2 + 1)
    half = np.cos(np.pi * k / n)
    if n % 2 == 0:
        half[n // 2] = 0.0
    z = np.empty(n + 1)
    z[:half.size] = half
    # mirror so that z_k == -z_{n-k} holds exactly
    z[n + 1 - half.size:] = -half[::-1]
    return z


def cc_weights_direct(n):
    """Clenshaw-Curtis weights by the explicit cosine sum, any ``n >= 2``.

    The phase ``2 j k pi / n`` is reduced modulo ``2 pi`` in exact integer
    arithmetic before the cosine is taken, which keeps the sum accurate
    for large ``n``.
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ParameterError("cc_weights_direct: n must be an integer >= 2")
    jmax = n // 2 if n % 2 == 0 else (n - 1) // 2
    j = np.arange(jmax + 1)
    coef = _eps_boundary(n, 2 * j) ** 2 * (2.0 / (1.0 - 4.0 * j * j))
    k = np.arange(n + 1)
    phase = (2 * np.outer(j, k)) % (2 * n)
    cosmat = np.cos((np.pi / n) * phase)
    return (_eps_boundary(n, k) ** 2 / n) * (coef @ cosmat)


def cc_weights_fast(n):
    """Clenshaw-Curtis weights via one DCT-I; ``n`` must be ``2**t, t >= 2``."""
    if not isinstance(n, (int, np.integer)) or n < 4 or n & (n - 1):
        raise ParameterError(
            "cc_weights_fast: n must be a power of two >= 4")
    a = _dct_load(n)
    ahat = fft_core.dct1(a)
    k = np.arange(n + 1)
    return _eps_boundary(n, k) / np.sqrt(2.0 * n) * ahat


def _dct_load(n):
    # even entries eps_n(2j) * 2/(1 - 4 j^2), odd entries zero
    a = np.zeros(n + 1)
    j = np.arange(n // 2 + 1)
    a[::2] = _eps_boundary(n, 2 * j) * (2.0 / (1.0 - 4.0 * j * j))
    return a


def cc_quadrature(n):
    """Build a :class:`CcQuadrature`, dispatching to the DCT-I fast path
    whenever ``n`` is a power of two >= 4."""
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ParameterError("cc_quadrature: n must be an integer >= 2")
    if n >= 4 and (n & (n - 1)) == 0:
        w = cc_weights_fast(n)
    else:
        w = cc_weights_direct(n)
    return CcQuadrature(int(n), _chebyshev_points(n), np.asarray(w, dtype=float))


def sinc_expsum_eval(quad, N, x):
    """Evaluate the exponential-sum surrogate at arbitrary ``x in [-1, 1]``.

    Direct summation over the ``n + 1`` terms; cost ``O(n len(x))``.
    """
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    if arr.size and np.max(np.abs(arr)) > 1.0 + _DOMAIN_TOL:
        raise ParameterError("sinc_expsum_eval: x must lie in [-1, 1]")
    arr = np.clip(arr, -1.0, 1.0)
    out = np.empty(arr.size, dtype=complex)
    chunk = 2048
    zw = quad.weights
    for lo in range(0, arr.size, chunk):
        xb = arr[lo:lo + chunk]
        phase = np.exp((-1j * np.pi * N) * np.outer(xb, quad.points))
        out[lo:lo + xb.size] = (phase * zw).sum(axis=1)
    if np.isscalar(x) or np.asarray(x).ndim == 0:
        return out[0]
    return out


def sinc_expsum_eval_grid(quad, N, R):
    """Evaluate the surrogate on the even grid ``x_r = 2r/R, r in I_R``.

    Uses one adjoint NFFT of degree ``R`` with a high-accuracy internal
    window (its own error is far below the surrogate's plateau), so the
    cost is ``O(R log R + n)`` rather than ``O(n R)``.

    Requires even ``R >= 2 N``.  Returns the values ordered by ascending
    ``r = -R/2 .. R/2 - 1``.
    """
    if not isinstance(R, (int, np.integer)) or R < 2 or R % 2:
        raise ParameterError("sinc_expsum_eval_grid: R must be a positive even integer")
    if R < 2 * N:
        raise ParameterError("sinc_expsum_eval_grid: need R >= 2*N")
    nodes = quad.points * (N / R)
    plan = nfft_plan(int(R), nodes, sigma=2.0, m=12, window="sinh")
    return nfft_adjoint(plan, quad.weights.astype(complex))


def sinc_expsum_max_error(quad, N, R):
    """Max deviation from ``sinc(pi N x)`` on the grid ``x_r = 2r/R``."""
    approx = sinc_expsum_eval_grid(quad, N, R)
    r = np.arange(R) - R // 2
    exact = sinc(np.pi * N * (2.0 * r / R))
    return float(np.max(np.abs(approx - exact)))


def cc_export_csv(quad, path):
    """Write the quadrature to ``path`` as CSV with columns k, z_k, w_k."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("# schema=1\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["k", "z_k", "w_k"])
        for k in range(quad.n + 1):
            writer.writerow([k, format(quad.points[k], ".17g"),
                             format(quad.weights[k], ".17g")])
