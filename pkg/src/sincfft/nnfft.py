"""NNFFT: exponential sums nonequispaced in both space and frequency.

Approximates, for arbitrary frequencies ``v_k`` and spatial nodes ``x_j``,

    f(x_j) = sum_k f_k e^{-2 pi i N v_k x_j},

by spreading each frequency onto a first oversampled grid (window
``phi_1``), deconvolving with the transform of a second window ``phi_2``,
one FFT onto a finer grid, gathering around each spatial node with
``phi_2``, and finally dividing by ``phi_hat_1`` at the nodes.  Cost is
``O(m1 M1 + N2 log N2 + m2 M2)`` instead of ``O(M1 M2)``.

Frequencies must satisfy ``|v_k| <= 1/(2a)`` with ``a = 1 + 2 m1 / N1``;
:func:`rescale_frequencies` maps data given on ``[-1/2, 1/2]`` onto an
admissible configuration with a slightly enlarged bandwidth.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import fft_core
from .errors import ParameterError, PositivityError
from .windows import WindowSpec, phi_eval, phi_hat_eval

_DOMAIN_TOL = 1e-12


@dataclass(frozen=True)
class NnfftGeometry:
    """Grid sizes and derived constants for one NNFFT configuration.

    ``sigma2`` is the effective second oversampling after rounding the
    fine grid length up to an even integer; the requested value is kept in
    ``sigma2_nominal``.
    """

    N: int
    M1: int
    M2: int
    sigma1: float
    sigma2: float
    m1: int
    m2: int
    N1: int
    N2: int
    a: float
    sigma2_nominal: float

    @classmethod
    def from_parameters(cls, N, M1, M2, sigma1, sigma2, m1, m2):
        if not isinstance(N, (int, np.integer)) or N <= 0:
            raise ParameterError("N must be a positive integer")
        for name, val in (("M1", M1), ("M2", M2)):
            if not isinstance(val, (int, np.integer)) or val <= 0:
                raise ParameterError(f"{name} must be a positive integer")
        for name, val in (("m1", m1), ("m2", m2)):
            if not isinstance(val, (int, np.integer)) or val < 2:
                raise ParameterError(f"{name} must be an integer >= 2")
        if not sigma1 > 1.0 or not sigma2 > 1.0:
            raise ParameterError("sigma1 and sigma2 must be > 1")

        n1f = sigma1 * N
        N1 = int(round(n1f))
        if abs(n1f - N1) > 1e-9 or N1 % 2:
            raise ParameterError(
                f"sigma1*N must be an even integer, got {n1f}")
        if 2 * m1 > N1 // 2:
            raise ParameterError(
                f"need 2*m1 <= N1/2, got 2*{m1} > {N1 // 2}")

        K = N1 + 2 * m1
        n2f = sigma2 * K
        N2 = int(round(n2f))
        if abs(n2f - N2) > 1e-9:
            N2 = math.ceil(n2f)
        if N2 % 2:
            N2 += 1
        sigma2_eff = N2 / K

        # 1 - 1/sigma1 evaluated with the exact grid ratio N/N1
        if 2 * m2 > (1.0 - N / N1) * N2 + 1e-9:
            raise ParameterError(
                f"need 2*m2 <= (1 - 1/sigma1)*N2, got 2*{m2} > {(1.0 - N / N1) * N2:g}")

        a = K / N1
        return cls(int(N), int(M1), int(M2), N1 / N, sigma2_eff,
                   int(m1), int(m2), N1, N2, a, float(sigma2))


class NnfftPlan:
    """Precomputed tables for one (frequencies, nodes) pair."""

    def __init__(self, geometry, window1, window2, v, x,
                 spread_idx, spread_val, gather_idx, gather_val, hat1, hat2):
        self.geometry = geometry
        self.window1 = window1
        self.window2 = window2
        self.v = v
        self.x = x
        self.spread_idx = spread_idx
        self.spread_val = spread_val
        self.gather_idx = gather_idx
        self.gather_val = gather_val
        self.hat1 = hat1
        self.hat2 = hat2


def rescale_frequencies(N, v, sigma1, m1):
    """Shrink frequencies from ``[-1/2, 1/2]`` into the admissible band.

    Returns ``(N_star, v_star)`` with ``N_star = N + ceil(2 m1 / sigma1)``
    and ``v_star = v * N / N_star``, which keeps every product
    ``N * v_k = N_star * v_star_k`` exactly and guarantees
    ``|v_star| <= 1/(2 a_star)`` for the enlarged bandwidth.
    """
    if not isinstance(N, (int, np.integer)) or N <= 0:
        raise ParameterError("rescale_frequencies: N must be a positive integer")
    if not sigma1 > 1.0:
        raise ParameterError("rescale_frequencies: sigma1 must be > 1")
    if not isinstance(m1, (int, np.integer)) or m1 < 2:
        raise ParameterError("rescale_frequencies: m1 must be an integer >= 2")
    arr = np.asarray(v, dtype=float)
    if arr.size and np.max(np.abs(arr)) > 0.5 + _DOMAIN_TOL:
        raise ParameterError("rescale_frequencies: frequencies must lie in [-1/2, 1/2]")
    n_star = int(N) + math.ceil(2 * m1 / sigma1)
    return n_star, arr * (N / n_star)


def nnfft_plan(N, v, x, *, sigma1=2.0, sigma2=2.0, m1=4, m2=4,
               window1="sinh", window2="sinh"):
    """Build an :class:`NnfftPlan`.

    Parameters
    ----------
    N : int
        Bandwidth; ``sigma1 * N`` must be an even integer.
    v : array, shape (M1,)
        Frequencies with ``|v| <= 1/(2a)``, ``a = 1 + 2 m1/(sigma1 N)``.
        Data on the full interval ``[-1/2, 1/2]`` must be passed through
        :func:`rescale_frequencies` first.
    x : array, shape (M2,)
        Spatial nodes in ``[-1/2, 1/2]``.
    sigma1, sigma2 : float
        Oversampling factors of the two stages.
    m1, m2 : int
        Window cut-offs.
    window1, window2 : str
        Window shapes for the spreading and gathering stage.
    """
    v = np.ascontiguousarray(v, dtype=float)
    x = np.ascontiguousarray(x, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise ParameterError("nnfft_plan: v must be a nonempty 1-d array")
    if x.ndim != 1 or x.size == 0:
        raise ParameterError("nnfft_plan: x must be a nonempty 1-d array")
    geo = NnfftGeometry.from_parameters(N, v.size, x.size,
                                        float(sigma1), float(sigma2),
                                        int(m1), int(m2))

    vmax = 0.5 / geo.a
    if np.max(np.abs(v)) > vmax + _DOMAIN_TOL:
        raise ParameterError(
            "nnfft_plan: frequencies exceed 1/(2a) = {:.6g}; apply "
            "rescale_frequencies to map [-1/2, 1/2] data into the band".format(vmax))
    v = np.clip(v, -vmax, vmax)
    if np.max(np.abs(x)) > 0.5 + _DOMAIN_TOL:
        raise ParameterError("nnfft_plan: spatial nodes must lie in [-1/2, 1/2]")
    x = np.clip(x, -0.5, 0.5)

    w1 = WindowSpec(window1, geo.m1, geo.sigma1, geo.N1)
    w2 = WindowSpec(window2, geo.m2, geo.sigma2, geo.N2)

    hat1 = np.asarray(phi_hat_eval(w1, geo.N * x), dtype=float)
    if np.any(hat1 <= 0.0):
        raise PositivityError(
            "nnfft_plan: phi_hat_1(N x_j) must be strictly positive at every node")
    K = geo.N1 + 2 * geo.m1
    hat2 = np.asarray(phi_hat_eval(w2, np.arange(K) - K // 2), dtype=float)
    if np.any(hat2 <= 0.0):
        raise PositivityError(
            "nnfft_plan: phi_hat_2 must be strictly positive on the coarse grid")

    # spreading table: phi_1(l/N1 - v_k) on the fixed 2*m1 stencil around
    # floor(N1 v_k); the support never leaves the padded index range, so
    # out-of-range entries (window zeros at the stencil boundary) are clipped
    center = np.floor(geo.N1 * v).astype(np.int64)
    offs = np.arange(1 - geo.m1, geo.m1 + 1, dtype=np.int64)
    ell = center[:, None] + offs[None, :]
    sval = np.asarray(phi_eval(w1, ell / geo.N1 - v[:, None]), dtype=float)
    spos = ell + K // 2
    bad = (spos < 0) | (spos >= K)
    if np.any(bad):
        sval = np.where(bad, 0.0, sval)
        spos = np.clip(spos, 0, K - 1)

    # gathering table: phi_2(x_j/sigma1 - s/N2), indexed mod N2 because the
    # fine-grid values are N2-periodic
    xs = x * (geo.N / geo.N1)  # x/sigma1 with the exact grid ratio
    centre2 = np.floor(geo.N2 * xs).astype(np.int64)
    offs2 = np.arange(1 - geo.m2, geo.m2 + 1, dtype=np.int64)
    s_ell = centre2[:, None] + offs2[None, :]
    gval = np.asarray(phi_eval(w2, xs[:, None] - s_ell / geo.N2), dtype=float)
    gpos = np.mod(s_ell, geo.N2)

    return NnfftPlan(geo, w1, w2, v, x, spos, sval, gpos, gval, hat1, hat2)


def nnfft_trafo(plan, f):
    """Evaluate ``sum_k f_k e^{-2 pi i N v_k x_j}`` at all plan nodes.

    Parameters
    ----------
    plan : NnfftPlan
    f : complex array, shape (M1,)

    Returns
    -------
    complex ndarray, shape (M2,)
    """
    geo = plan.geometry
    f = np.ascontiguousarray(f, dtype=complex)
    if f.shape != (geo.M1,):
        raise ParameterError(
            f"nnfft_trafo: expected {geo.M1} coefficients, got {f.shape}")
    K = geo.N1 + 2 * geo.m1

    # spread onto the coarse grid
    w = f[:, None] * plan.spread_val
    flat = plan.spread_idx.ravel()
    g = (np.bincount(flat, weights=w.real.ravel(), minlength=K)
         + 1j * np.bincount(flat, weights=w.imag.ravel(), minlength=K)) / geo.N1

    # deconvolve with the second window and run one FFT onto the fine grid
    ghat = g / plan.hat2
    buf = np.zeros(geo.N2, dtype=complex)
    buf[np.mod(np.arange(K) - K // 2, geo.N2)] = ghat
    h = fft_core.fft(buf, "forward") / geo.N2

    # gather at the spatial nodes and undo the first window in Fourier space
    s1 = (h[plan.gather_idx] * plan.gather_val).sum(axis=1)
    return s1 / plan.hat1
