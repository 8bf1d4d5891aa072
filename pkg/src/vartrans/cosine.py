"""Cosine expansions on [-1, 1] in the basis ``cos(k pi (y + 1) / 2)``.

Discrete coefficients come from samples at the equispaced nodes
``y_j = -1 + 2 j / n`` through a DCT-I, computed as an FFT of the even
extension of length ``2n``.
"""

from dataclasses import dataclass

import numpy as np
import numpy.polynomial.chebyshev as cheb
from scipy import integrate

__all__ = [
    "CosineExpansion",
    "nodes",
    "discrete_coefficients",
    "direct_coefficients",
    "evaluate_expansion",
    "evaluate_on_uniform_grid",
    "exact_coefficient",
    "aliased_index",
]


@dataclass(frozen=True)
class CosineExpansion:
    """Coefficients ``c_0..c_n`` of ``sum_k c_k cos(k pi (y+1)/2)``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, copy=True)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a non-empty 1-d array")
        if not np.all(np.isfinite(c)):
            raise ValueError("coeffs must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def n(self):
        return self.coeffs.size - 1

    def __call__(self, y):
        return evaluate_expansion(self, y)


def nodes(n):
    """Equispaced sample points ``y_j = -1 + 2j/n``, ``j = 0..n``."""
    if n < 1:
        raise ValueError("need n >= 1")
    return -1.0 + 2.0 * np.arange(n + 1) / n


def _dct1(v):
    """``V_k = sum_j w_j v_j cos(j k pi / n)``, with ``w_0 = w_n = 1/2``, else 1.

    Computed from an FFT of the even extension ``v_0..v_n, v_{n-1}..v_1``.
    """
    n = v.shape[0] - 1
    ext = np.concatenate([v, v[-2:0:-1]])
    if np.iscomplexobj(v):
        out = np.fft.fft(ext)[: n + 1]
    else:
        out = np.fft.rfft(ext)[: n + 1].real
    return 0.5 * out


def discrete_coefficients(samples):
    """Discrete cosine coefficients from node samples ``F(y_0)..F(y_n)``.

    ``c_k = (2 g_k / n) sum_j g_j F(y_j) cos(j k pi / n)``, with
    ``g_0 = g_n = 1/2`` and ``g_k = 1`` otherwise.  Complex samples are
    supported.
    """
    v = np.asarray(samples)
    if not np.iscomplexobj(v):
        v = v.astype(float)
    if v.ndim != 1 or v.size < 2:
        raise ValueError("need n + 1 >= 2 samples")
    n = v.size - 1
    c = (2.0 / n) * _dct1(v)
    c[0] *= 0.5
    c[n] *= 0.5
    return CosineExpansion(c)


def direct_coefficients(samples):
    """O(n^2) reference evaluation of :func:`discrete_coefficients`."""
    v = np.asarray(samples)
    n = v.size - 1
    g = np.ones(n + 1)
    g[0] = g[n] = 0.5
    j = np.arange(n + 1)
    cosmat = np.cos(np.pi * np.outer(j, j) / n)
    c = (2.0 * g / n) * (cosmat @ (g * v))
    return CosineExpansion(c)


def evaluate_expansion(e, y):
    """Evaluate the expansion at ``y`` in [-1, 1] by Clenshaw recurrence.

    ``cos(k theta) = T_k(cos theta)`` with ``theta = pi (y+1)/2``, so the sum
    is a Chebyshev series in ``cos theta = -sin(pi y / 2)``.
    """
    y_arr = np.asarray(y, dtype=float)
    if np.any(np.abs(y_arr) > 1.0):
        raise ValueError("evaluate_expansion needs -1 <= y <= 1")
    xc = -np.sin(0.5 * np.pi * y_arr)
    out = cheb.chebval(xc, e.coeffs)
    if np.ndim(y) == 0:
        return out.item() if hasattr(out, "item") else out
    return out


def evaluate_on_uniform_grid(e, m):
    """Values at the ``m + 1`` points ``y_i = -1 + 2i/m``, for ``m >= n``.

    Exact zero-padded DCT-I, ``O(m log m)``.
    """
    n = e.n
    if m < max(n, 1):
        raise ValueError(f"grid resolution m={m} must be at least n={n}")
    a = np.zeros(m + 1, dtype=e.coeffs.dtype)
    a[: n + 1] = e.coeffs
    a[0] *= 2.0
    a[m] *= 2.0
    return _dct1(a)


def exact_coefficient(f, k, tol=1e-12, limit=10_000):
    """Continuous coefficient ``c_k`` of ``f`` by adaptive quadrature.

    ``c_0 = (1/2) int f``, ``c_k = int f(y) cos(k pi (y+1)/2) dy``.  Complex
    ``f`` is handled by integrating real and imaginary parts separately.
    Raises ``ArithmeticError`` if the quadrature does not reach ``tol``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    weight = 0.5 if k == 0 else 1.0

    def integrand(part):
        def h(y):
            return part(f(y)) * np.cos(k * np.pi * (y + 1.0) / 2.0)
        return h

    total = 0.0
    for part, unit in ((np.real, 1.0), (np.imag, 1j)):
        if part is np.imag and not np.iscomplexobj(np.asarray(f(0.0))):
            continue
        val, err = integrate.quad(integrand(part), -1.0, 1.0, epsabs=tol, epsrel=0.0,
                                  limit=limit)
        if err > tol:
            raise ArithmeticError(f"quadrature for c_{k} only reached {err:.3g} > {tol:.3g}")
        total = total + unit * val
    return weight * total


def aliased_index(k, n):
    """Index ``k'`` that mode ``k`` aliases onto under n+1 node sampling."""
    return abs((k + n - 1) % (2 * n) - (n - 1))
