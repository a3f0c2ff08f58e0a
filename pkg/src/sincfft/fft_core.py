"""Uniform transform kernels the fast algorithms are built on.

Wraps the pocketfft implementations behind the two call shapes used in this
package: an unnormalized complex FFT of arbitrary length and the orthogonal
(self-inverse) cosine transform of type I.
"""

import numpy as np
import scipy.fft

from .errors import ParameterError


def fft(values, direction="forward"):
    """Unnormalized discrete Fourier transform of a 1-d complex array.

    ``forward`` computes ``X_s = sum_l x_l e^{-2 pi i l s / L}``;
    ``inverse`` flips the sign of the exponent and applies no scaling, so
    ``fft(fft(x), "inverse") == L * x``.
    """
    v = np.asarray(values)
    if v.ndim != 1 or v.size == 0:
        raise ParameterError("fft: need a nonempty 1-d array")
    if direction == "forward":
        return scipy.fft.fft(v)
    if direction == "inverse":
        return scipy.fft.ifft(v) * v.size
    raise ParameterError(f"fft: direction must be 'forward' or 'inverse', got {direction!r}")


def dct1(values):
    """Orthogonal cosine transform of type I of a length-(n+1) real array.

    Applies the symmetric orthogonal matrix
    ``sqrt(2/n) * (eps(j) eps(k) cos(j k pi / n))`` with half-weights
    ``eps = sqrt(2)/2`` at the two boundary indices; the transform is its
    own inverse.
    """
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or v.size < 3:
        raise ParameterError("dct1: need a 1-d array of length n+1 >= 3")
    return scipy.fft.dct(v, type=1, norm="ortho")
