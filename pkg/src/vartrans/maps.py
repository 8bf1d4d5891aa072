"""Variable transforms from (0, 1) onto the real line and their inverses.

Four families are supported:

``E``    exponential (logit) map,
``DE``   double-exponential map,
``SE``   parametrized exponential map with strip parameter ``alpha``,
``SDE``  parametrized double-exponential map, ``g o psi_SE``.

All maps satisfy ``psi_inv(s) + psi_inv(-s) = 1``.  The implementation leans
on that: inverses are evaluated on the non-positive half-line, where the
result is a small number known to full relative precision, and the positive
half is obtained as ``1 - psi_inv(-s)``.  Forward maps likewise reflect
``x > 1/2`` onto ``1 - x``.

Real-valued functions accept scalars or arrays.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .special import log_ratio_1p_exp

__all__ = [
    "MAP_KINDS",
    "MapSpec",
    "FinitePrecisionWarning",
    "psi_forward",
    "psi_inverse",
    "psi_inverse_complex",
    "g_inverse",
    "g_forward",
    "strip_halfwidth",
]

MAP_KINDS = ("E", "SE", "DE", "SDE")

# below these alpha the naive formulas overflow in double precision
ALPHA_GUIDE = {"SE": 0.0044, "SDE": 0.24}


class FinitePrecisionWarning(UserWarning):
    """Map parameter below the double-precision guideline.

    ``kind``, ``alpha`` and ``threshold`` are attached for callers that want
    to record the event rather than print it.
    """

    def __init__(self, kind, alpha, threshold):
        self.kind = kind
        self.alpha = alpha
        self.threshold = threshold
        super().__init__(
            f"psi_{kind} with alpha={alpha:.6g} is below the finite-precision "
            f"guideline alpha >= {threshold}"
        )


@dataclass(frozen=True)
class MapSpec:
    """Which transform to use, plus ``alpha`` for the parametrized kinds."""

    kind: str
    alpha: float | None = None

    def __post_init__(self):
        if self.kind not in MAP_KINDS:
            raise ValueError(f"unknown map kind {self.kind!r}; expected one of {MAP_KINDS}")
        if self.kind in ("SE", "SDE"):
            if self.alpha is None or not (self.alpha > 0 and math.isfinite(self.alpha)):
                raise ValueError(f"psi_{self.kind} needs a positive finite alpha, got {self.alpha}")
            object.__setattr__(self, "alpha", float(self.alpha))
            w = self.precision_warning()
            if w is not None:
                warnings.warn(w, stacklevel=3)
        elif self.alpha is not None:
            raise ValueError(f"psi_{self.kind} takes no alpha parameter")

    @property
    def parametrized(self):
        return self.kind in ("SE", "SDE")

    def precision_warning(self):
        """Return a :class:`FinitePrecisionWarning` if alpha is below guideline."""
        if not self.parametrized:
            return None
        threshold = ALPHA_GUIDE[self.kind]
        if self.alpha < threshold:
            return FinitePrecisionWarning(self.kind, self.alpha, threshold)
        return None

    def __str__(self):
        if self.parametrized:
            return f"{self.kind}(alpha={self.alpha:.6g})"
        return self.kind


def strip_halfwidth(m):
    """Half-width of the strip on which ``psi_inverse`` is analytic."""
    if m.kind == "E":
        return math.pi
    if m.kind == "DE":
        return math.pi / 2
    return m.alpha if m.kind == "SE" else m.alpha / 2


def _scalar_or_array(out, like):
    if np.ndim(like) == 0:
        return out.item()
    return out


# --- helpers -------------------------------------------------------------

def _log_expm1(u):
    """log(e^u - 1) for u > 0 without overflow."""
    with np.errstate(divide="ignore"):
        big = u > 1.0
        return np.where(big, u + np.log(-np.expm1(-np.where(big, u, 1.0))),
                        np.log(np.expm1(np.where(big, 1.0, u))))


def _log_cosh(v):
    """log cosh(v) for real v, overflow-free."""
    v = np.abs(v)
    return v + np.log1p(np.exp(-2.0 * v)) - math.log(2.0)


def _sinh_over_cosh(u, v):
    """sinh(u) / cosh(v) for real u and v >= 0, evaluated in log space."""
    au = np.abs(u)
    with np.errstate(over="ignore"):
        mag = np.exp(au - v) * (-np.expm1(-2.0 * au)) / (1.0 + np.exp(-2.0 * v))
    return np.sign(u) * mag


def _g_inv_raw(t, alpha):
    c = math.pi / alpha
    return t + (alpha / math.pi) * _sinh_over_cosh(c * t, 0.5 * c)


# --- g and its inverse ---------------------------------------------------

def g_inverse(t, alpha):
    """``g^{-1}(t; alpha) = t + (alpha/pi) sinh(pi t/alpha) / cosh(pi/(2 alpha))``.

    Raises ``OverflowError`` only when the exact value exceeds the double
    range.
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    t_arr = np.asarray(t, dtype=float)
    out = _g_inv_raw(t_arr, alpha)
    if np.any(np.isinf(out) & np.isfinite(t_arr)):
        raise OverflowError("g_inverse result exceeds the double range")
    return _scalar_or_array(out, t)


def _g_inv_deriv(t, alpha):
    c = math.pi / alpha
    au = np.abs(c * t)
    v = 0.5 * c
    with np.errstate(over="ignore"):
        ratio = np.exp(au - v) * (1.0 + np.exp(-2.0 * au)) / (1.0 + np.exp(-2.0 * v))
    return 1.0 + ratio


def g_forward(s, alpha, tol=1e-14, maxiter=100):
    """Solve ``g^{-1}(t; alpha) = s`` for ``t``.

    Newton's method safeguarded by bisection.  Since ``g^{-1}`` is odd,
    increasing and satisfies ``|g^{-1}(t)| >= |t|``, the root of a positive
    ``s`` lies in ``[0, s]``.  Converged points satisfy
    ``|g^{-1}(t) - s| <= tol * max(1, |s|)``, or the bracket has shrunk to
    a few ulps of ``t`` (the best attainable in double precision).
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    s_arr = np.atleast_1d(np.asarray(s, dtype=float))
    sign = np.sign(s_arr)
    target = np.abs(s_arr)
    if np.any(~np.isfinite(target)):
        raise ValueError("g_forward needs finite arguments")

    c = math.pi / alpha
    # t0 from inverting the dominant sinh term
    with np.errstate(divide="ignore"):
        log_x = np.log(np.where(target > 0, c * target, 1.0)) + _log_cosh(0.5 * c)
    asinh_x = np.where(log_x > 20.0, log_x + math.log(2.0),
                       np.arcsinh(np.exp(np.minimum(log_x, 20.0))))
    t = np.minimum(target, asinh_x / c)
    t = np.where(target > 0, t, 0.0)

    lo = np.zeros_like(target)
    hi = target.copy()
    scale = np.maximum(1.0, target)
    done = target == 0
    for _ in range(maxiter):
        r = _g_inv_raw(t, alpha) - target
        ok = np.abs(r) <= tol * scale
        narrow = (hi - lo) <= 4.0 * np.spacing(np.maximum(np.abs(t), 1e-300))
        done = done | ok | narrow
        if done.all():
            return _scalar_or_array(sign * t, s)
        lo = np.where(r < 0, np.maximum(lo, t), lo)
        hi = np.where(r > 0, np.minimum(hi, t), hi)
        with np.errstate(over="ignore", invalid="ignore"):
            t_new = t - r / _g_inv_deriv(t, alpha)
        bad = ~np.isfinite(t_new) | (t_new <= lo) | (t_new >= hi)
        t_new = np.where(bad, 0.5 * (lo + hi), t_new)
        t = np.where(done, t, t_new)
    raise ArithmeticError(
        f"g_forward did not converge to tol={tol} within {maxiter} iterations"
    )


# --- inverse maps ---------------------------------------------------------

def _inv_nonpos(m, s):
    """psi^{-1}(s) for s <= 0 (values in [0, 1/2])."""
    kind = m.kind
    with np.errstate(over="ignore", under="ignore"):
        if kind == "E":
            return 1.0 / (1.0 + np.exp(-s))
        if kind == "DE":
            return 1.0 / (1.0 + np.exp(-math.pi * np.sinh(s)))
        alpha = m.alpha
        c = math.pi / alpha
        if kind == "SE":
            a = c * (s + 0.5)
            b = c * (s - 0.5)
        else:
            shift = _sinh_over_cosh(c * s, 0.5 * c)
            a = c * (s + 0.5) + shift
            b = c * (s - 0.5) + shift
        return (alpha / math.pi) * log_ratio_1p_exp(a, b)


def psi_inverse(m, s):
    """Inverse map ``x = psi^{-1}(s)`` with values in ``[0, 1]``.

    ``s = -inf`` and ``s = +inf`` map to 0 and 1.  Results that underflow
    saturate at the exact limits.
    """
    s_arr = np.asarray(s, dtype=float)
    if np.any(np.isnan(s_arr)):
        raise ValueError("psi_inverse got NaN")
    neg = -np.abs(s_arr)
    x = _inv_nonpos(m, neg)
    x = np.clip(np.nan_to_num(x, nan=0.0), 0.0, 0.5)
    out = np.where(s_arr > 0, 1.0 - x, x)
    return _scalar_or_array(out, s)


# --- forward maps ---------------------------------------------------------

def _fwd_low(m, x):
    """psi(x) for 0 < x <= 1/2."""
    kind = m.kind
    if kind in ("E", "DE"):
        t = np.log(x) - np.log1p(-x)
        return t if kind == "E" else np.arcsinh(t / math.pi)
    alpha = m.alpha
    c = math.pi / alpha
    with np.errstate(divide="ignore"):
        # offset -1/2 makes psi_SE(1/2) = 0, consistent with the inverse
        u = (alpha / math.pi) * (_log_expm1(c * x) - np.log(-np.expm1(c * (x - 1.0)))) - 0.5
    if kind == "SE":
        return u
    return g_forward(u, alpha)


def psi_forward(m, x):
    """Forward map ``s = psi(x)`` for ``0 < x < 1``."""
    x_arr = np.asarray(x, dtype=float)
    if np.any(~(x_arr > 0.0) | ~(x_arr < 1.0)):
        raise ValueError("psi_forward needs 0 < x < 1")
    hi = x_arr > 0.5
    low = np.where(hi, 1.0 - x_arr, x_arr)
    s = np.asarray(_fwd_low(m, low), dtype=float)
    out = np.where(hi, -s, s)
    return _scalar_or_array(out, x)


# --- complex continuation -------------------------------------------------

def _clog_ratio(a, b):
    """log(1+e^a) - log(1+e^b) for complex a, b with Re b < 0.

    Continuous along the real axis; on the reflected half-strip each
    logarithm stays on the principal branch.
    """
    big = a.real > 30.0
    a_big = np.where(big, a, 0.0)
    a_small = np.where(big, 0.0, a)
    log_num = np.where(big, a_big + np.log1p(np.exp(-a_big)), np.log1p(np.exp(a_small)))
    return log_num - np.log1p(np.exp(b))


def psi_inverse_complex(m, z):
    """Analytic continuation of ``psi^{-1}`` inside its analyticity strip.

    Intended for test oracles (strip suprema, Cauchy-Riemann checks).
    Raises ``ValueError`` when ``|Im z|`` reaches the strip half-width.
    """
    z_arr = np.asarray(z, dtype=complex)
    width = strip_halfwidth(m)
    if np.any(np.abs(z_arr.imag) >= width) or np.any(~np.isfinite(z_arr)):
        raise ValueError(f"z outside the analyticity strip |Im z| < {width:.6g} of psi_{m.kind}")
    # reflect onto Re z <= 0 using psi^{-1}(z) = 1 - psi^{-1}(-z)
    flip = z_arr.real > 0
    w = np.where(flip, -z_arr, z_arr)
    kind = m.kind
    with np.errstate(over="ignore", under="ignore"):
        if kind == "E":
            out = 1.0 / (1.0 + np.exp(-w))
        elif kind == "DE":
            out = 1.0 / (1.0 + np.exp(-math.pi * np.sinh(w)))
        else:
            alpha = m.alpha
            c = math.pi / alpha
            if kind == "SE":
                shift = 0.0
            else:
                shift = np.sinh(c * w) / np.cosh(0.5 * c)
            a = c * (w + 0.5) + shift
            b = c * (w - 0.5) + shift
            out = (alpha / math.pi) * _clog_ratio(a, b)
    out = np.where(flip, 1.0 - out, out)
    if np.ndim(z) == 0:
        return complex(out)
    return out
