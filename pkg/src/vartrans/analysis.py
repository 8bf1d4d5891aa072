"""Error-bound evaluators, convergence indices and resolution measurement.

The bound functions return the right-hand sides of the published
estimates; nothing here proves anything, it only evaluates.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .approximant import build_from_rule, measure_error

__all__ = [
    "BOUND_PREFACTOR",
    "BoundParams",
    "ResolutionRecord",
    "ResolutionNotFound",
    "general_bound",
    "rate_index",
    "rate_branches",
    "resolution_H",
    "psi_e_resolution_bound",
    "psi_se_resolution_terms",
    "oscillatory",
    "measure_resolution",
    "resolution_for_rule",
    "resolution_constant",
    "SCALINGS",
]

# crude constant A <= 114 pi^2 shared by the psi_E estimates
BOUND_PREFACTOR = 114.0 * math.pi**2


@dataclass(frozen=True)
class BoundParams:
    """Constants of the general interior/endpoint error bound.

    beta: strip half-width; tau: Hoelder exponent at the endpoints;
    M_psi: sup of |F| on the strip; N_psi: endpoint Hoelder constant;
    C_psi: sup of |psi^{-1}| on the disc of radius beta about -L.
    """

    beta: float
    tau: float
    M_psi: float
    N_psi: float
    C_psi: float

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError("beta must be positive")
        if not 0 < self.tau <= 1:
            raise ValueError("tau must lie in (0, 1]")
        for name in ("M_psi", "N_psi", "C_psi"):
            if not getattr(self, name) >= 0:
                raise ValueError(f"{name} must be non-negative")


def general_bound(p, n, L):
    """``3 N bb^-1 C^tau + 114 M bb^-2 n exp(-beta n pi / (2L))``, ``bb = min(beta, 1)``.

    Only valid for ``L <= n``; larger ``L`` raises ``ValueError``.
    """
    if L > n:
        raise ValueError(f"bound requires L <= n (got L={L}, n={n})")
    bb = min(p.beta, 1.0)
    endpoint = 3.0 * p.N_psi / bb * p.C_psi**p.tau if p.N_psi else 0.0
    interior = 0.0
    if p.M_psi:
        interior = 114.0 * p.M_psi / bb**2 * n * math.exp(-p.beta * n * math.pi / (2.0 * L))
    return endpoint + interior


def rate_branches(kind, *, c=None, alpha0=None, L0=None, beta=None, tau=None):
    """The two competing convergence indices (interior, endpoint) for a map.

    E:   exp(beta pi / (2c)),       exp(tau c)
    SE:  exp(alpha0 pi / (2L0+1)),  exp(tau pi L0 / alpha0)
    DE:  exp(beta pi / 2),          exp(tau pi c / 2)
    SDE: exp(pi^2 L0 / (4L0+2)),    exp(c tau)
    """
    if kind == "E":
        return math.exp(beta * math.pi / (2.0 * c)), math.exp(tau * c)
    if kind == "SE":
        return math.exp(alpha0 * math.pi / (2.0 * L0 + 1.0)), math.exp(tau * math.pi * L0 / alpha0)
    if kind == "DE":
        return math.exp(beta * math.pi / 2.0), math.exp(tau * math.pi * c / 2.0)
    if kind == "SDE":
        return math.exp(math.pi**2 * L0 / (4.0 * L0 + 2.0)), math.exp(c * tau)
    raise ValueError(f"unknown map kind {kind!r}")


def rate_index(kind, *, c=None, alpha0=None, L0=None, beta=None, tau=None, combine="min"):
    """Convergence index ``rho``: error ~ rho^-sqrt(n) (E, SE) or rho^-(n/log cn) (DE, SDE).

    The slower branch governs, so ``combine="min"`` is the default for every
    family.  The published statement for SDE combines its branches with a
    max; pass ``combine="max"`` to get that value.
    """
    branches = rate_branches(kind, c=c, alpha0=alpha0, L0=L0, beta=beta, tau=tau)
    if combine == "min":
        return min(branches)
    if combine == "max":
        return max(branches)
    raise ValueError("combine must be 'min' or 'max'")


def resolution_H(t):
    """``H(t) = 0`` on [0, 1), ``t arccos(1/sqrt t) - sqrt(t - 1)`` for t >= 1."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0):
        raise ValueError("H is defined for t >= 0")
    tt = np.maximum(t_arr, 1.0)
    out = np.where(t_arr < 1.0, 0.0, tt * np.arccos(1.0 / np.sqrt(tt)) - np.sqrt(tt - 1.0))
    if t_arr.ndim == 0:
        return float(out)
    return out


def psi_e_resolution_bound(omega, n, c):
    """Interior and endpoint terms of the psi_E oscillatory bound, without ``A``.

    For ``f = exp(-2 pi i omega x)`` and ``L = c sqrt(n)``, with
    ``n* = c^2 omega^2`` and ``q = 1 - (n*/n)^(1/4)``:

        interior = q^-1 exp(-pi omega H(sqrt(n/n*)))
        endpoint = 2 pi omega q^-2 exp(4 pi omega e^(pi - c sqrt n) - c sqrt n)

    The full bound is ``BOUND_PREFACTOR * (interior + endpoint)``.
    """
    n_star = c * c * omega * omega
    if not n > n_star:
        raise ValueError(f"need n > n* = c^2 omega^2 = {n_star:.6g}, got n={n}")
    if omega < math.pi + math.log(2.0):
        raise ValueError("need omega >= pi + log 2")
    q = 1.0 - (n_star / n) ** 0.25
    interior = math.exp(-math.pi * omega * resolution_H(math.sqrt(n / n_star))) / q
    sq = c * math.sqrt(n)
    log_end = math.log(2.0 * math.pi * omega) - 2.0 * math.log(q)
    log_end += 4.0 * math.pi * omega * math.exp(math.pi - sq) - sq
    endpoint = math.exp(log_end) if log_end < 709.0 else math.inf
    return interior, endpoint


def psi_se_resolution_terms(omega, n, alpha0, L0):
    """The two terms of the psi_SE oscillatory estimate (order-of, no constant).

    interior = exp(alpha0 pi (2 omega - n/(2L0+1)) / sqrt n)
    endpoint = omega exp(-pi L0 sqrt(n) / alpha0)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rn = math.sqrt(n)
    expo = alpha0 * math.pi * (2.0 * omega - n / (2.0 * L0 + 1.0)) / rn
    interior = math.exp(expo) if expo < 709.0 else math.inf
    endpoint = omega * math.exp(-math.pi * L0 * rn / alpha0)
    return interior, endpoint


def oscillatory(omega):
    """The resolution test function ``x -> exp(-2 pi i omega x)``."""
    def f(x):
        return np.exp(-2j * math.pi * omega * np.asarray(x, dtype=float))
    f.omega = omega
    return f


class ResolutionNotFound(RuntimeError):
    """No degree up to the budget reached the target accuracy."""

    def __init__(self, omega, delta, n_max, best_error):
        self.omega = omega
        self.delta = delta
        self.n_max = n_max
        self.best_error = best_error
        super().__init__(
            f"omega={omega}: error {best_error:.3g} > delta={delta:g} for all n <= {n_max}"
        )


@dataclass(frozen=True)
class ResolutionRecord:
    """Smallest degree ``R`` resolving frequency ``omega`` to accuracy ``delta``."""

    omega: float
    delta: float
    R: int
    achieved_error: float
    evaluations: int = field(default=0, compare=False)


def measure_resolution(builder, omega, delta, n_max, grid=20000, f=None):
    """delta-resolution of a method on ``exp(-2 pi i omega x)``.

    ``builder(n)`` must return the approximant of degree ``n`` for that
    function.  The search grows ``n`` geometrically (factor 1.25) until the
    error drops to ``delta``, then steps through the bracket in increments
    of ``max(1, width // 64)``.  A degree is accepted only if the error is
    also within ``delta`` one step further on, since the error need not be
    monotone in ``n``.
    """
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    if f is None:
        f = oscillatory(omega)
    cache = {}

    def err(n):
        if n not in cache:
            cache[n] = measure_error(builder(n), f, grid).total
        return cache[n]

    best = math.inf
    prev, n = 0, 1
    while True:
        if n > n_max:
            raise ResolutionNotFound(omega, delta, n_max, best)
        e = err(n)
        best = min(best, e)
        if e <= delta:
            break
        nxt = max(n + 1, math.ceil(1.25 * n))
        prev, n = n, (min(nxt, n_max) if n < n_max else nxt)

    step = max(1, (n - prev) // 64)
    cand = prev + step if prev > 0 else n
    while cand <= n_max:
        e = err(cand)
        if e <= delta and cand + step <= n_max and err(cand + step) <= delta:
            return ResolutionRecord(omega, delta, cand, e, len(cache))
        if e <= delta and cand + step > n_max:
            return ResolutionRecord(omega, delta, cand, e, len(cache))
        cand += step
    raise ResolutionNotFound(omega, delta, n_max, min(cache.values()))


def resolution_for_rule(rule, omega, delta, n_max, grid=20000):
    """:func:`measure_resolution` for a :class:`~vartrans.approximant.ParameterRule`."""
    f = oscillatory(omega)
    return measure_resolution(lambda n: build_from_rule(f, rule, n), omega, delta, n_max, grid, f)


def _scale_omega(omega, c):
    return omega


def _scale_omega2(omega, c):
    return omega * omega


def _scale_omega_log(omega, c):
    return omega * math.log(c * omega)


SCALINGS = {"omega": _scale_omega, "omega2": _scale_omega2, "omega_log": _scale_omega_log}


def resolution_constant(records, scaling="omega", c=1.0):
    """Finite-sample proxy for ``limsup R / scaling(omega)``.

    Takes the maximum of ``R / scaling(omega)`` over the upper half of the
    records by ``omega``.  ``scaling`` is ``"omega"``, ``"omega2"`` or
    ``"omega_log"`` (``omega log(c omega)``).
    """
    if scaling not in SCALINGS:
        raise ValueError(f"scaling must be one of {sorted(SCALINGS)}")
    recs = sorted(records, key=lambda r: r.omega)
    if len(recs) < 3:
        raise ValueError("need at least three records")
    top = recs[len(recs) // 2:]
    fn = SCALINGS[scaling]
    return max(r.R / fn(r.omega, c) for r in top)
