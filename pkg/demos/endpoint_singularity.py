"""
Approximating x^(1/3) through a variable transformation
=======================================================

A cube root has an infinite derivative at x = 0, so a plain cosine series on
[0, 1] converges slowly.  Pulling the interval back through a map that crowds
points toward the ends fixes that.  Here we compare the logistic map (E) with
its strip-adapted variant (SE) on the same degrees.
"""

import math

import numpy as np

from vartrans import ParameterRule, build_from_rule, measure_error

f = np.cbrt

# E uses L = c sqrt(n); SE uses L = L0 + 1/2 and alpha = alpha0 / sqrt(n)
rules = {
    "E  c=1.2": ParameterRule("E", c=1.2),
    "SE alpha0=1, L0=0.75": ParameterRule("SE", alpha0=1.0, L0=0.75),
}

ns = [k * k for k in range(4, 31, 4)]
print("n     " + "".join(f"{name:>24s}" for name in rules))
errors = {name: [] for name in rules}
for n in ns:
    row = []
    for name, rule in rules.items():
        err = measure_error(build_from_rule(f, rule, n), f).total
        errors[name].append(err)
        row.append(f"{err:24.3e}")
    print(f"{n:<6d}" + "".join(row))

# The error behaves like rho^(-sqrt n), so log(error) against sqrt(n) is a line.
print()
for name, errs in errors.items():
    slope = np.polyfit(np.sqrt(ns), np.log(errs), 1)[0]
    print(f"{name}: fitted rate rho = {math.exp(-slope):.3f}")
