"""Scalar special functions used by the maps and the parameter rules.

Everything here is a pure function of its arguments.
"""

import math

import numpy as np

__all__ = [
    "lambert_w0",
    "jacobi_sn",
    "jacobi_sn_cn",
    "ellipk_agm",
    "log1p_exp",
    "log_ratio_1p_exp",
]

_INV_E = math.exp(-1.0)
_EPS = np.finfo(float).eps


def lambert_w0(x, tol=1e-14, maxiter=100):
    """Principal branch of the Lambert-W function for real ``x >= -1/e``.

    Solves ``w * exp(w) = x`` by Halley iteration.  The iteration stops once
    ``|w e^w - x| <= tol * max(1, |x|)`` or once the update stalls at the
    rounding level of ``w``.

    Raises
    ------
    ValueError
        If ``x < -1/e`` or ``x`` is not finite.
    ArithmeticError
        If the iteration cap is hit, which means ``tol`` is too tight.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"lambert_w0 needs a finite argument, got {x}")
    if x < -_INV_E:
        raise ValueError(f"lambert_w0 is undefined below -1/e, got {x}")
    if x == 0.0:
        return 0.0
    if x == -_INV_E:
        return -1.0

    if x >= 0.0:
        w = math.log1p(x)
        if x > 3.0:
            # asymptotic start is much closer than log1p for large x
            lx = math.log(x)
            w = lx - math.log(lx)
    elif x > -0.25:
        w = x
    else:
        # expansion about the branch point, p = sqrt(2(ex + 1))
        p = math.sqrt(max(2.0 * (math.e * x + 1.0), 0.0))
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p**3

    scale = max(1.0, abs(x))
    for _ in range(maxiter):
        ew = math.exp(w)
        f = w * ew - x
        if abs(f) <= tol * scale:
            return w
        wp1 = w + 1.0
        if wp1 == 0.0:
            return w
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        step = f / denom
        w_new = w - step
        if w_new < -1.0:
            w_new = -1.0
        if abs(w_new - w) <= 2.0 * _EPS * max(abs(w_new), 1e-300):
            w = w_new
            ew = math.exp(w)
            if abs(w * ew - x) <= tol * scale:
                return w
            break
        w = w_new
    raise ArithmeticError(
        f"lambert_w0({x!r}) did not reach tol={tol} in {maxiter} iterations"
    )


def _agm_ladder(k, maxlevels=10, eps=1e-15):
    """Descending Landen / AGM ladder (a_i, c_i) for modulus ``k``."""
    a = [1.0]
    b = math.sqrt((1.0 - k) * (1.0 + k))
    c = [k]
    while abs(c[-1]) >= eps and len(a) <= maxlevels:
        a_prev = a[-1]
        a.append(0.5 * (a_prev + b))
        c.append(0.5 * (a_prev - b))
        b = math.sqrt(a_prev * b)
    return a, c


def ellipk_agm(k):
    """Complete elliptic integral of the first kind K(k) via the AGM."""
    if not 0.0 <= k < 1.0:
        raise ValueError(f"modulus must lie in [0, 1), got {k}")
    a, b = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
    while abs(a - b) > 4.0 * _EPS * a:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (a + b)


def jacobi_sn_cn(u, k):
    """Jacobi ``sn(u, k)`` and ``cn(u, k)`` for modulus ``0 <= k < 1``.

    ``u`` may be a scalar or an array.  Uses the descending Landen
    (arithmetic-geometric mean) scheme with at most ten levels, after
    reducing ``u`` modulo the real period ``4K(k)``.
    """
    if not 0.0 <= k < 1.0:
        raise ValueError(f"modulus must lie in [0, 1), got {k}")
    u = np.asarray(u, dtype=float)
    if k == 0.0:
        return np.sin(u), np.cos(u)

    # work with |u| so that sn is exactly odd and cn exactly even
    sign = np.where(u < 0, -1.0, 1.0)
    period = 4.0 * ellipk_agm(k)
    ur = np.remainder(np.abs(u), period)
    ur = np.where(ur > 0.5 * period, ur - period, ur)

    a, c = _agm_ladder(k)
    n = len(a) - 1
    phi = (2.0**n) * a[n] * ur
    for i in range(n, 0, -1):
        phi = 0.5 * (phi + np.arcsin(c[i] / a[i] * np.sin(phi)))
    sn, cn = sign * np.sin(phi), np.cos(phi)
    if sn.ndim == 0:
        return float(sn), float(cn)
    return sn, cn


def jacobi_sn(u, k):
    """Jacobi elliptic function ``sn(u, k)`` (modulus convention)."""
    return jacobi_sn_cn(u, k)[0]


def log1p_exp(a):
    """``log(1 + e^a)`` without overflow; ``-inf`` and ``+inf`` allowed."""
    a = np.asarray(a, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        pos = a > 0
        out = np.where(pos, a + np.log1p(np.exp(-np.abs(a))), np.log1p(np.exp(np.minimum(a, 0.0))))
    return out


def log_ratio_1p_exp(a, b):
    """``log((1 + e^a) / (1 + e^b))`` without overflow or cancellation.

    For positive arguments the rearrangement
    ``log1p(e^a) = a + log1p(e^-a)`` is used, and the difference ``a - b``
    is formed before the small corrections are added.  Infinite arguments
    give the exact limits.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a, b = np.broadcast_arrays(a, b)
    with np.errstate(over="ignore", invalid="ignore"):
        ea = np.log1p(np.exp(-np.abs(a)))
        eb = np.log1p(np.exp(-np.abs(b)))
        both_pos = (a > 0) & (b > 0)
        both_inf = both_pos & np.isinf(a) & np.isinf(b)
        diff = np.where(both_inf, 0.0, a - b)
        out_pos = diff + (ea - eb)
        out_mixed = np.maximum(a, 0.0) + ea - np.maximum(b, 0.0) - eb
        out = np.where(both_pos, out_pos, out_mixed)
        # two negative arguments: both terms are tiny, keep relative accuracy
        both_neg = (a <= 0) & (b <= 0)
        out = np.where(both_neg, ea - eb, out)
    if out.ndim == 0:
        return float(out)
    return out
