"""End-to-end transform approximation of functions on [0, 1].

``f`` is transplanted to ``F(s) = f(psi^{-1}(s))``, truncated to ``[-L, L]``
and rescaled to ``F_L(y) = F(L y)``, which is then approximated by a cosine
expansion of degree ``n``.  Outside ``[x_L, 1 - x_L]`` the approximation is
the constant endpoint value.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import cosine
from .maps import MapSpec, psi_forward, psi_inverse
from .special import lambert_w0

__all__ = [
    "ParameterRule",
    "MappedApproximant",
    "ErrorReport",
    "SampleEvaluationError",
    "select_parameters",
    "make_map",
    "build_approximant",
    "build_from_rule",
    "evaluate_approximant",
    "measure_error",
    "interior_grid_size",
]

RULE_VARIANTS = ("theorem", "caption")


class SampleEvaluationError(ArithmeticError):
    """``f`` failed or returned a non-finite value at a sample node."""

    def __init__(self, index, x, cause=None):
        self.index = index
        self.x = x
        msg = f"f could not be evaluated at node {index} (x={x!r})"
        if cause is not None:
            msg += f": {cause}"
        super().__init__(msg)


@dataclass(frozen=True)
class ParameterRule:
    """How ``L`` and ``alpha`` scale with ``n`` for one map family.

    ``E`` needs ``c``; ``SE`` needs ``alpha0`` and ``L0``; ``DE`` needs ``c``;
    ``SDE`` needs ``c`` and ``L0``.  ``variant="caption"`` switches the
    double-exponential rules to ``L = W(cn)`` and ``alpha = L0 pi / W(cn)``.
    """

    kind: str
    c: float | None = None
    alpha0: float | None = None
    L0: float | None = None
    variant: str = "theorem"

    _needs = {"E": ("c",), "SE": ("alpha0", "L0"), "DE": ("c",), "SDE": ("c", "L0")}

    def __post_init__(self):
        if self.kind not in self._needs:
            raise ValueError(f"unknown map kind {self.kind!r}")
        if self.variant not in RULE_VARIANTS:
            raise ValueError(f"variant must be one of {RULE_VARIANTS}, got {self.variant!r}")
        for name in self._needs[self.kind]:
            value = getattr(self, name)
            if value is None or not value > 0:
                raise ValueError(f"rule for psi_{self.kind} needs {name} > 0, got {value}")


def select_parameters(rule, n):
    """Truncation ``L`` and map parameter ``alpha`` (or None) for degree ``n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    kind = rule.kind
    caption = rule.variant == "caption"
    if kind == "E":
        return rule.c * math.sqrt(n), None
    if kind == "SE":
        return rule.L0 + 0.5, rule.alpha0 / math.sqrt(n)
    w = lambert_w0(rule.c * n)
    if kind == "DE":
        return (w if caption else 1.0 + w), None
    denom = w if caption else 0.5 * math.pi + w
    return rule.L0 + 0.5, rule.L0 * math.pi / denom


def make_map(kind, alpha=None):
    return MapSpec(kind, alpha if kind in ("SE", "SDE") else None)


@dataclass(frozen=True)
class MappedApproximant:
    """Realized approximation ``p_{n,L}`` for one map, truncation and degree."""

    map: MapSpec
    L: float
    n: int
    expansion: cosine.CosineExpansion
    endpoint_lo: complex | float
    endpoint_hi: complex | float
    x_L: float

    def __call__(self, x):
        return evaluate_approximant(self, x)


@dataclass(frozen=True)
class ErrorReport:
    """Discrete sup-norm errors: interior, the two endpoint pieces, and total."""

    interior: float
    endpoint_lo: float
    endpoint_hi: float

    @property
    def total(self):
        return max(self.interior, self.endpoint_lo, self.endpoint_hi)

    @property
    def endpoint(self):
        return max(self.endpoint_lo, self.endpoint_hi)


def _eval_f(f, x):
    with np.errstate(all="ignore"):
        vals = np.asarray(f(x))
    if vals.shape != np.shape(x):
        vals = np.broadcast_to(vals, np.shape(x)).copy()
    return vals


def _sample(f, x):
    try:
        vals = _eval_f(f, x)
    except Exception as exc:  # locate the offending node
        for j, xj in enumerate(np.atleast_1d(x)):
            try:
                _eval_f(f, np.array([xj]))
            except Exception as inner:
                raise SampleEvaluationError(j, float(xj), inner) from exc
        raise
    bad = ~np.isfinite(vals)
    if np.any(bad):
        j = int(np.flatnonzero(np.atleast_1d(bad))[0])
        raise SampleEvaluationError(j, float(np.atleast_1d(x)[j]), "non-finite value")
    return vals


def build_approximant(f, m, L, n):
    """Sample ``F_L`` at the ``n + 1`` nodes and form the cosine expansion.

    ``f`` must accept numpy arrays.  It is only evaluated at
    ``psi^{-1}(L y_j)``, which lie strictly inside (0, 1) unless the map
    saturates.  ``n = 0`` gives the constant ``F_L(0) = f(1/2)``.
    """
    if not L > 0:
        raise ValueError(f"L must be positive, got {L}")
    n = int(n)
    if n < 0:
        raise ValueError("n must be non-negative")
    x_lo = psi_inverse(m, -L)
    x_hi = psi_inverse(m, L)
    if n == 0:
        vals = _sample(f, np.array([0.5]))
        expansion = cosine.CosineExpansion(vals)
        ends = _sample(f, np.array([x_lo, x_hi]))
    else:
        y = cosine.nodes(n)
        x = psi_inverse(m, L * y)
        vals = _sample(f, x)
        expansion = cosine.discrete_coefficients(vals)
        ends = vals[[0, -1]]
    lo, hi = ends[0].item(), ends[1].item()
    return MappedApproximant(m, float(L), n, expansion, lo, hi, float(x_lo))


def build_from_rule(f, rule, n):
    """Build with ``L`` and ``alpha`` taken from a :class:`ParameterRule`."""
    L, alpha = select_parameters(rule, max(n, 1))
    return build_approximant(f, make_map(rule.kind, alpha), L, n)


def evaluate_approximant(p, x):
    """Evaluate ``p`` at ``x`` in [0, 1] using the three-branch definition."""
    x_arr = np.asarray(x, dtype=float)
    if np.any((x_arr < 0.0) | (x_arr > 1.0)):
        raise ValueError("evaluate_approximant needs 0 <= x <= 1")
    flat = np.atleast_1d(x_arr).ravel()
    dtype = np.result_type(p.expansion.coeffs.dtype, np.asarray(p.endpoint_lo).dtype)
    out = np.empty(flat.shape, dtype=dtype)
    # closed intervals: at x_L the two branches agree, and when x_L has
    # underflowed to 0 the endpoints themselves must take the constant branch
    lo = flat <= p.x_L
    hi = flat >= 1.0 - p.x_L
    mid = ~(lo | hi)
    out[lo] = p.endpoint_lo
    out[hi] = p.endpoint_hi
    if np.any(mid):
        xm = np.clip(flat[mid], np.nextafter(0.0, 1.0), np.nextafter(1.0, 0.0))
        y = np.clip(np.asarray(psi_forward(p.map, xm)) / p.L, -1.0, 1.0)
        out[mid] = cosine.evaluate_expansion(p.expansion, y)
    out = out.reshape(np.shape(x_arr))
    if x_arr.ndim == 0:
        return out.item()
    return out


def interior_grid_size(n, grid):
    """Subdivisions ``m`` of the interior y-grid: ``m >= grid``, ``m = r n`` with even ``r >= 4``."""
    if n == 0:
        return max(grid, 2)
    r = max(4, math.ceil(grid / n))
    r += r % 2
    return r * n


def _endpoint_error(f, ref, a, b, count):
    """max |f - ref| over ``count`` equispaced points of [a, b]."""
    if b <= a:
        return 0.0
    x = np.linspace(a, b, count)
    vals = _eval_f(f, x)
    keep = np.isfinite(vals)
    if not np.any(keep):
        return 0.0
    return float(np.max(np.abs(vals[keep] - ref)))


def measure_error(p, f, grid=20000):
    """Three-part discrete sup-norm error of ``p`` against ``f``.

    Interior: ``max |F_L - P|`` on a uniform grid of ``[-1, 1]`` with at
    least ``grid`` intervals, aligned with the sample nodes (at least four
    points per node interval) and summed exactly by a zero-padded DCT.
    Endpoints: ``max |f - f(x_L)|`` on ``ceil(grid * x_L)`` (min 32)
    equispaced points of ``[0, x_L]``, and likewise on ``[1 - x_L, 1]``.
    Points where ``f`` is not finite (a singular endpoint) are skipped.
    """
    if grid < 2:
        raise ValueError("grid must be >= 2")
    m = interior_grid_size(p.n, grid)
    y = -1.0 + 2.0 * np.arange(m + 1) / m
    exact = _sample(f, psi_inverse(p.map, p.L * y))
    if p.n == 0:
        approx = np.full(m + 1, p.expansion.coeffs[0])
    else:
        approx = cosine.evaluate_on_uniform_grid(p.expansion, m)
    interior = float(np.max(np.abs(exact - approx)))

    count = max(32, math.ceil(grid * p.x_L))
    x_hi = psi_inverse(p.map, p.L)
    lo = _endpoint_error(f, p.endpoint_lo, 0.0, p.x_L, count)
    hi = _endpoint_error(f, p.endpoint_hi, x_hi, 1.0, count)
    return ErrorReport(interior, lo, hi)
