"""Registry of benchmark functions on [0, 1]."""

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .special import jacobi_sn

__all__ = ["TestFunctionSpec", "REGISTRY", "get_function", "f1", "f2", "f3"]

SN_MODULUS = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class TestFunctionSpec:
    """A named benchmark function.

    ``make(omega)`` returns the vectorized callable; ``omega`` is ignored by
    non-oscillatory entries.  ``known_tau`` is the Hoelder exponent at the
    endpoints.  ``beta_E`` and ``beta_DE`` are strip half-widths under the
    corresponding maps, when known, for predicted convergence indices.
    """

    __test__ = False  # not a pytest class, despite the name

    id: str
    description: str
    make: Callable = field(repr=False, compare=False)
    known_tau: float | None = None
    beta_E: float | None = None
    beta_DE: float | None = None
    oscillatory: bool = False
    default_omega: float | None = None

    def __call__(self, omega=None):
        if self.oscillatory:
            return self.make(self.default_omega if omega is None else omega)
        return self.make(omega)


def _one(omega=None):
    def f(x):
        return np.ones_like(np.asarray(x, dtype=float))
    return f


def _cbrt(omega=None):
    def f(x):
        return np.cbrt(np.asarray(x, dtype=float))
    return f


def _osc(omega):
    def f(x):
        return np.exp(-2j * math.pi * omega * np.asarray(x, dtype=float))
    return f


def f1(omega=400):
    """Singular oscillatory ``x^(1/5) exp(-2 pi i omega x)``; omega=400 is the full-size case."""
    def f(x):
        x = np.asarray(x, dtype=float)
        return np.power(x, 0.2) * np.exp(-2j * math.pi * omega * x)
    return f


def f2(omega=None):
    """Singular Runge-type ``sqrt(x) / (1 + 100^2 (x - 1/2)^2)``."""
    def f(x):
        x = np.asarray(x, dtype=float)
        return np.sqrt(x) / (1.0 + 1e4 * (x - 0.5) ** 2)
    return f


def f3(omega=None):
    """``x^(1/2) (1-x)^(3/4) sn(log(x^5 / (1-x)^3), 1/sqrt 2)``, zero at both ends."""
    def f(x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            u = 5.0 * np.log(x) - 3.0 * np.log1p(-x)
            u = np.where(np.isfinite(u), u, 0.0)
            out = np.sqrt(x) * np.power(1.0 - x, 0.75) * jacobi_sn(u, SN_MODULUS)
        return out
    return f


def _pole_strip(z0):
    """Strip half-widths under psi_E and psi_DE set by a pole at z0."""
    t = cmath.log(z0 / (1.0 - z0))
    return abs(t.imag), abs(cmath.asinh(t / math.pi).imag)


_F2_BETA = _pole_strip(0.5 + 0.01j)

REGISTRY = {
    spec.id: spec
    for spec in [
        TestFunctionSpec("one", "constant 1", _one, known_tau=1.0),
        TestFunctionSpec("x13", "x^(1/3)", _cbrt, known_tau=1.0 / 3.0,
                         beta_E=math.pi, beta_DE=1.0),
        TestFunctionSpec("osc", "exp(-2 pi i omega x)", _osc, known_tau=1.0,
                         oscillatory=True, default_omega=10.0),
        TestFunctionSpec("f1", "x^(1/5) exp(-2 pi i omega x)", f1, known_tau=0.2,
                         beta_E=math.pi, beta_DE=1.0, oscillatory=True, default_omega=400.0),
        TestFunctionSpec("f2", "sqrt(x) / (1 + 100^2 (x - 1/2)^2)", f2, known_tau=0.5,
                         beta_E=_F2_BETA[0], beta_DE=_F2_BETA[1]),
        TestFunctionSpec("f3", "x^(1/2) (1-x)^(3/4) sn(log(x^5/(1-x)^3), 1/sqrt 2)", f3,
                         known_tau=0.5),
    ]
}


def get_function(function_id):
    try:
        return REGISTRY[function_id]
    except KeyError:
        raise KeyError(f"unknown function id {function_id!r}; known: {sorted(REGISTRY)}") from None
