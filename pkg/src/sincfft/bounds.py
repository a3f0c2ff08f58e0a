"""Closed-form error bounds for the fast transforms.

All bounds are worst-case constants per unit coefficient mass: an
algorithm whose bound is ``E`` satisfies
``max_j |exact_j - computed_j| <= E * sum_k |c_k|``.

The sinc-surrogate bound decays like ``e^{-N (nu - C)}`` with the decay
threshold ``C = pi (e^2 - 1) / (2 e) = pi sinh(1) ~= 3.692``: the
Chebyshev oversampling ``nu = n / N`` must exceed ``C`` before the
surrogate converges, and ``nu = 4`` is the smallest practical integer
choice.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .special import bessel_i1

#: Decay threshold of the Clenshaw-Curtis sinc surrogate:
#: ``pi (e^2 - 1) / (2 e)`` (equivalently ``pi * sinh(1)``).
SINC_DECAY_CONSTANT = math.pi * (math.e ** 2 - 1.0) / (2.0 * math.e)

_SIGMA_TOL = 1e-9


def _check_sinh_params(m, sigma, who):
    if not isinstance(m, (int, np.integer)) or m < 2:
        raise ParameterError(f"{who}: m must be an integer >= 2")
    if not (1.25 - _SIGMA_TOL <= sigma <= 2.0 + _SIGMA_TOL):
        raise ParameterError(
            f"{who}: sinh-type bounds require 5/4 <= sigma <= 2, got {sigma}")


def bound_general_window(c1, c2, mu, m, sigma, omega_hat_at):
    """Gridding error constant for a window with tail parameters.

    For a window whose shape transform satisfies a two-term tail estimate
    with constants ``c1``, ``c2`` and algebraic decay rate ``mu > 1``, the
    error constant is

        (2 c1 + (2 c2 / ((mu - 1) m^mu)) (1 - 1/(2 sigma))^(1 - mu))
            / omega_hat_at

    where ``omega_hat_at`` is the shape transform at the band edge
    ``m / (2 sigma)``.
    """
    if not mu > 1.0:
        raise ParameterError("bound_general_window: mu must be > 1")
    if c1 < 0 or c2 < 0:
        raise ParameterError("bound_general_window: c1 and c2 must be >= 0")
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise ParameterError("bound_general_window: m must be a positive integer")
    if not sigma > 1.0:
        raise ParameterError("bound_general_window: sigma must be > 1")
    if not omega_hat_at > 0.0:
        raise ParameterError("bound_general_window: omega_hat_at must be positive")
    tail = (2.0 * c2 / ((mu - 1.0) * m ** mu)) * (1.0 - 1.0 / (2.0 * sigma)) ** (1.0 - mu)
    return (2.0 * c1 + tail) / omega_hat_at


def bound_sinh_E(m, sigma):
    """Single-stage gridding error constant of the sinh-type window:
    ``(24 m^{3/2} + 10) e^{-2 pi m sqrt(1 - 1/sigma)}``."""
    _check_sinh_params(m, sigma, "bound_sinh_E")
    return (24.0 * m ** 1.5 + 10.0) * math.exp(
        -2.0 * math.pi * m * math.sqrt(1.0 - 1.0 / sigma))


def hat_phi_sinh_at_half(N, sigma, m):
    """Exact value of the sinh window transform at the band edge ``N/2``:

        (m pi / (N1 sinh beta)) (1 - 1/(2 sigma)) (1 - 1/sigma)^(-1/2)
            * I_1(2 pi m sqrt(1 - 1/sigma)),

    with ``N1 = sigma N`` and ``beta = 2 pi m (1 - 1/(2 sigma))``.
    """
    _check_sinh_params(m, sigma, "hat_phi_sinh_at_half")
    if N <= 0:
        raise ParameterError("hat_phi_sinh_at_half: N must be positive")
    N1 = sigma * N
    beta = 2.0 * math.pi * m * (1.0 - 1.0 / (2.0 * sigma))
    arg = 2.0 * math.pi * m * math.sqrt(1.0 - 1.0 / sigma)
    # I1(arg)/sinh(beta) with the exponentials paired off; arg < beta always
    ratio = 2.0 * bessel_i1(arg) * math.exp(-beta) / (-math.expm1(-2.0 * beta))
    return (m * math.pi / N1) * (1.0 - 1.0 / (2.0 * sigma)) * ratio / math.sqrt(
        1.0 - 1.0 / sigma)


def bound_nnfft_sinh(N, sigma1, sigma2, m1, m2):
    """Error constant of the two-stage transform with sinh windows.

    Valid for ``m2 >= m1 >= 2`` and oversampling factors in ``[5/4, 2]``;
    decreasing in both cut-offs for fixed oversampling.
    """
    _check_sinh_params(m1, sigma1, "bound_nnfft_sinh")
    _check_sinh_params(m2, sigma2, "bound_nnfft_sinh")
    if m2 < m1:
        raise ParameterError("bound_nnfft_sinh: requires m2 >= m1")
    if N <= 0:
        raise ParameterError("bound_nnfft_sinh: N must be positive")
    N1 = sigma1 * N
    factor = ((2.0 * N1 + 4.0 * m1) / math.sqrt(2.0 * m1 * math.pi)
              * math.exp(2.0 * math.pi * m1 * (1.0 - math.sqrt(1.0 - 1.0 / sigma1)
                                               - 1.0 / (2.0 * sigma1))))
    return bound_sinh_E(m1, sigma1) + factor * bound_sinh_E(m2, sigma2)


def bound_cc_sinc(N, nu):
    """Uniform error of the Clenshaw-Curtis sinc surrogate on ``[-1, 1]``:

        36 (1 + e^{-2 C N}) / (35 (e^2 - 1)) * e^{-N (nu - C)}.

    Decays only for ``nu > C``; returns ``inf`` when the value overflows.
    """
    if N <= 0:
        raise ParameterError("bound_cc_sinc: N must be positive")
    if not nu > 0:
        raise ParameterError("bound_cc_sinc: nu must be positive")
    C = SINC_DECAY_CONSTANT
    expo = -N * (nu - C)
    if expo > 700.0:
        return math.inf
    return (36.0 * (1.0 + math.exp(-2.0 * C * N))
            / (35.0 * (math.e ** 2 - 1.0)) * math.exp(expo))


def choose_n(N, epsilon, shape="pow2"):
    """Smallest surrogate size ``n`` whose bound beats ``epsilon``.

    ``shape="pow2"`` searches ``n = 2^t`` (t >= 2, enabling the DCT-I
    weight path); ``shape="multiple"`` searches integer multiples
    ``n = nu N``.
    """
    if not isinstance(N, (int, np.integer)) or N <= 0:
        raise ParameterError("choose_n: N must be a positive integer")
    if not 0.0 < epsilon < 1.0:
        raise ParameterError("choose_n: epsilon must lie in (0, 1)")
    if shape == "pow2":
        for t in range(2, 64):
            n = 2 ** t
            if bound_cc_sinc(N, n / N) < epsilon:
                return n
    elif shape == "multiple":
        for nu in range(1, 10000):
            if bound_cc_sinc(N, float(nu)) < epsilon:
                return nu * int(N)
    else:
        raise ParameterError("choose_n: shape must be 'pow2' or 'multiple'")
    raise ParameterError("choose_n: no admissible n found")


def bound_fast_sinc(epsilon, e1, e2, a, hat_phi1_half, simplified=False):
    """Error constant of the fast sinc transform, per unit ``sum |c_k|``.

    With the surrogate level ``epsilon`` and the two-stage constant
    ``B = e1 + a e2 / hat_phi1_half``, the guaranteed bound is
    ``epsilon + 2B + B^2``; the ``simplified`` variant
    ``epsilon + 3 e1 + 3 a e2 / hat_phi1_half`` additionally requires
    ``B <= 1``.
    """
    for name, val in (("epsilon", epsilon), ("e1", e1), ("e2", e2)):
        if val < 0:
            raise ParameterError(f"bound_fast_sinc: {name} must be >= 0")
    if not a >= 1.0:
        raise ParameterError("bound_fast_sinc: a must be >= 1")
    if not hat_phi1_half > 0.0:
        raise ParameterError("bound_fast_sinc: hat_phi1_half must be positive")
    B = e1 + a * e2 / hat_phi1_half
    if simplified:
        if B > 1.0:
            raise ParameterError(
                "bound_fast_sinc: simplified form requires "
                "e1 + a*e2/hat_phi1_half <= 1")
        return epsilon + 3.0 * e1 + 3.0 * a * e2 / hat_phi1_half
    return epsilon + 2.0 * B + B * B


@dataclass(frozen=True)
class BoundReport:
    """All bound ingredients for one parameter set, fully assembled."""

    N: int
    m1: int
    m2: int
    sigma1: float
    sigma2: float
    nu: float
    e1: float
    e2: float
    hat_phi1_half: float
    a: float
    nnfft_bound: float
    cc_bound: float
    fast_sinc_bound_full: float
    fast_sinc_bound_simplified: float
    simplified_valid: bool


def bound_report(N, m1, m2, sigma1, sigma2, nu, epsilon=None):
    """Assemble a :class:`BoundReport`.

    ``epsilon`` defaults to the surrogate bound at oversampling ``nu``.
    The ``simplified`` value is reported even when its validity condition
    fails; ``simplified_valid`` says whether it may be used.
    """
    e1 = bound_sinh_E(m1, sigma1)
    e2 = bound_sinh_E(m2, sigma2)
    hat = hat_phi_sinh_at_half(N, sigma1, m1)
    a = 1.0 + 2.0 * m1 / (sigma1 * N)
    nnfft = bound_nnfft_sinh(N, sigma1, sigma2, m1, m2)
    cc = bound_cc_sinc(N, nu)
    eps = cc if epsilon is None else float(epsilon)
    B = e1 + a * e2 / hat
    full = bound_fast_sinc(eps, e1, e2, a, hat)
    simplified = eps + 3.0 * e1 + 3.0 * a * e2 / hat
    return BoundReport(int(N), int(m1), int(m2), float(sigma1), float(sigma2),
                       float(nu), e1, e2, hat, a, nnfft, cc, full, simplified,
                       bool(B <= 1.0))
