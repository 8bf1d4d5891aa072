import math

import numpy as np
import pytest
from scipy import special as sp

from vartrans.functions import REGISTRY, f1, f2, f3, get_function


def test_registry_ids_unique_and_lookup():
    assert len(REGISTRY) == len({s.id for s in REGISTRY.values()})
    assert get_function("f2").known_tau == 0.5
    with pytest.raises(KeyError):
        get_function("nope")


def test_f1_parametrized():
    x = np.array([0.0, 0.25, 1.0])
    assert np.allclose(f1(400)(x), x**0.2 * np.exp(-800j * np.pi * x), atol=0, rtol=1e-15)
    assert get_function("f1").default_omega == 400.0
    assert np.allclose(get_function("f1")(100)(x), f1(100)(x))


def test_f2_values():
    assert f2()(0.5) == pytest.approx(math.sqrt(0.5))
    assert f2()(0.0) == 0.0


def test_f3_midpoint_against_scipy_sn():
    # x^5 / (1-x)^3 = 1/4 at x = 1/2; scipy's ellipj takes the parameter m = k^2
    sn_ref = sp.ellipj(math.log(0.25), 0.5)[0]
    expect = 0.5**0.5 * 0.5**0.75 * sn_ref
    assert f3()(0.5) == pytest.approx(expect, rel=1e-13)


def test_f3_endpoints_and_bounds():
    x = np.array([0.0, 1e-12, 0.3, 1 - 1e-12, 1.0])
    v = f3()(x)
    assert np.all(np.isfinite(v))
    assert v[0] == 0.0 and v[-1] == 0.0
    assert np.all(np.abs(v) <= np.sqrt(x) * np.power(1 - x, 0.75) + 1e-300)


def test_f2_strip_constants_from_pole():
    spec = get_function("f2")
    # pole at 1/2 + i/100: psi_E maps it to i * 2 atan(1/50)
    assert spec.beta_E == pytest.approx(2 * math.atan(0.02), rel=1e-14)
    assert 0 < spec.beta_DE < spec.beta_E
