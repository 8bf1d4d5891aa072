"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (shown in the terminal summary) before
asserting, so a failing criterion still reports its measured numbers.
"""

import math
import time

import mpmath
import numpy as np
import pytest

from vartrans import bench
from vartrans.analysis import (
    BOUND_PREFACTOR,
    oscillatory,
    psi_e_resolution_bound,
    resolution_constant,
)
from vartrans.approximant import ParameterRule, build_from_rule, measure_error
from vartrans.cosine import (
    aliased_index,
    direct_coefficients,
    discrete_coefficients,
    evaluate_expansion,
    nodes,
)
from vartrans.maps import MapSpec, g_inverse, psi_forward, psi_inverse
from vartrans.special import jacobi_sn, lambert_w0, log_ratio_1p_exp

JOBS = bench.default_jobs()
# measured total error stalls near 1e-12 in double precision; the
# pre-machine-epsilon sweep stops a decade above that
ERROR_FLOOR = 1e-11
SQUARE_NS = np.arange(4, 31) ** 2  # n = 16 .. 900, uniform in sqrt(n)


def _slope(ns, errors):
    return np.polyfit(np.sqrt(ns), np.log(errors), 1)[0]


def _resolutions(rule, omegas, delta, n_max):
    tasks = [(rule, float(w), delta, n_max, 20000) for w in omegas]
    out = bench._run_tasks(bench._resolve_task, tasks, JOBS)
    for res in out:
        if "error" in res:
            pytest.fail(res["message"])
    return [res["record"] for res in out]


def test_criterion_01_map_identities(report):
    t0 = time.perf_counter()
    specs = [MapSpec("E"), MapSpec("DE")] + [MapSpec("SE", a) for a in (0.2, 0.5, 1.0)] + [
        MapSpec("SDE", a) for a in (0.3, 0.6, 1.0)]
    s = np.linspace(-20.0, 20.0, 1000)
    sym, rt = {}, {}
    for m in specs:
        x = psi_inverse(m, s)
        sym[str(m)] = float(np.max(np.abs(x + psi_inverse(m, -s) - 1.0)))
        keep = (x > 1e-15) & (x < 1.0 - 1e-15)
        back = psi_forward(m, x[keep])
        rt[str(m)] = float(np.max(np.abs(back - s[keep]) / np.maximum(1.0, np.abs(s[keep]))))
    comp = float(np.max(np.abs(psi_inverse(MapSpec("DE"), s)
                               - psi_inverse(MapSpec("E"), math.pi * np.sinh(s)))))
    for a in (0.3, 0.6, 1.0):
        with np.errstate(over="ignore"):
            t = np.array([g_inverse(v, a) if abs(v) < 5 else math.copysign(math.inf, v) for v in s])
        comp = max(comp, float(np.max(np.abs(psi_inverse(MapSpec("SDE", a), s)
                                             - psi_inverse(MapSpec("SE", a), t)))))
    elapsed = time.perf_counter() - t0
    ok_sym = max(sym.values()) <= 1e-12
    ok_rt = max(rt.values()) <= 1e-10
    ok_comp = comp <= 1e-12
    worst_rt = max(rt, key=rt.get)
    ok = ok_sym and ok_rt and ok_comp and elapsed < 5
    report(1, "map identities", ok,
           f"symmetry {max(sym.values()):.1e} (<=1e-12), composition {comp:.1e} (<=1e-12), "
           f"round trip worst {rt[worst_rt]:.1e} at {worst_rt} (<=1e-10), {elapsed:.2f}s")
    assert ok_sym and ok_comp
    assert ok_rt, f"round-trip residuals {rt}"
    assert elapsed < 5


def test_criterion_02_cosine_oracle(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(2)
    rel, interp, alias = 0.0, 0.0, 0.0
    for n in (4, 17, 64, 257):
        v = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
        fast = discrete_coefficients(v)
        slow = direct_coefficients(v).coeffs
        rel = max(rel, float(np.max(np.abs(fast.coeffs - slow)) / np.max(np.abs(slow))))
        interp = max(interp, float(np.max(np.abs(evaluate_expansion(fast, nodes(n)) - v))))
        # cosine polynomial of degree 3n: the discrete coefficients are the
        # exact amplitudes folded onto 0..n through the aliasing map
        amps = rng.standard_normal(3 * n + 1)
        ks = np.arange(3 * n + 1)
        vals = np.cos(np.outer(np.pi * (nodes(n) + 1.0) / 2.0, ks)) @ amps
        folded = np.zeros(n + 1)
        np.add.at(folded, [aliased_index(int(k), n) for k in ks], amps)
        got = discrete_coefficients(vals).coeffs
        alias = max(alias, float(np.max(np.abs(got - folded)) / np.max(np.abs(amps))))
    elapsed = time.perf_counter() - t0
    ok = rel <= 1e-12 and interp <= 1e-11 and alias <= 1e-12 and elapsed < 5
    report(2, "cosine transform oracle", ok,
           f"fast/direct rel {rel:.1e}, node interpolation {interp:.1e}, aliasing {alias:.1e}, "
           f"{elapsed:.2f}s")
    assert ok


def _rate_check(rule_for, params, neg_log_rho):
    f = np.cbrt
    out = []
    for prm in params:
        rule = rule_for(prm)
        errs = [measure_error(build_from_rule(f, rule, int(n)), f).total for n in SQUARE_NS]
        sl = _slope(SQUARE_NS, errs)
        target = neg_log_rho(prm)
        out.append((prm, sl, target, sl / target))
    return out


def test_criterion_03_convergence_E(report):
    t0 = time.perf_counter()
    res = _rate_check(lambda c: ParameterRule("E", c=c), (0.8, 1.2),
                      lambda c: -min(math.pi**2 / (2 * c), c / 3))
    elapsed = time.perf_counter() - t0
    ok = all(abs(r - 1) <= 0.25 for *_, r in res) and elapsed < 30
    report(3, "psi_E convergence rate", ok,
           ", ".join(f"c={c}: slope {sl:.4f} vs {tg:.4f} (ratio {r:.3f})" for c, sl, tg, r in res)
           + f", {elapsed:.1f}s")
    assert ok


def test_criterion_04_convergence_SE(report):
    t0 = time.perf_counter()
    L0, tau = 0.75, 1 / 3
    res = _rate_check(lambda a: ParameterRule("SE", alpha0=a, L0=L0), (0.5, 1.0),
                      lambda a: -min(a * math.pi / (2 * L0 + 1), tau * math.pi * L0 / a))
    elapsed = time.perf_counter() - t0
    ok = all(abs(r - 1) <= 0.25 for *_, r in res) and elapsed < 30
    report(4, "psi_SE convergence rate", ok,
           ", ".join(f"alpha0={a}: slope {sl:.4f} vs {tg:.4f} (ratio {r:.3f})" for a, sl, tg, r in res)
           + f", {elapsed:.1f}s")
    assert ok


def test_criterion_05_resolution_E(report):
    t0 = time.perf_counter()
    c = 0.5
    recs = _resolutions(ParameterRule("E", c=c), range(20, 141, 20), 1e-2, 100_000)
    const = resolution_constant(recs, "omega2")
    elapsed = time.perf_counter() - t0
    limit = 1.15 * c * c
    ok = const <= limit and elapsed < 180
    report(5, "psi_E resolution", ok,
           f"top-half max R/omega^2 = {const:.5f} <= {limit:.5f}; "
           + " ".join(f"{r.omega:g}:{r.R}" for r in recs) + f", {elapsed:.1f}s")
    assert ok


def test_criterion_06_resolution_SE(report):
    t0 = time.perf_counter()
    omegas = (250, 500, 1000, 1500, 2000)
    parts, ok = [], True
    for L0 in (0.1, 0.5):
        recs = _resolutions(ParameterRule("SE", alpha0=0.8, L0=L0), omegas, 1e-2, 100_000)
        const = resolution_constant(recs, "omega")
        hi = 1.10 * 4 * (L0 + 0.5)
        ok = ok and 2.0 <= const <= hi
        parts.append(f"L0={L0}: {const:.4f} in [2, {hi:.3f}]")
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 300
    report(6, "psi_SE resolution", ok, "; ".join(parts) + f", {elapsed:.1f}s")
    assert ok


def test_criterion_07_resolution_DE(report):
    t0 = time.perf_counter()
    c = 1.0
    recs = _resolutions(ParameterRule("DE", c=c), (125, 250, 500, 1000), 1e-2, 1_000_000)
    const = resolution_constant(recs, "omega_log", c)
    elapsed = time.perf_counter() - t0
    limit = 1.15 * math.pi
    ok = const <= limit and elapsed < 300
    report(7, "psi_DE resolution", ok,
           f"top-half max R/(omega log omega) = {const:.4f} (= {const / math.pi:.3f} pi) "
           f"<= {limit:.4f}; " + " ".join(f"{r.omega:g}:{r.R}" for r in recs) + f", {elapsed:.1f}s")
    assert ok


def test_criterion_08_resolution_SDE(report):
    t0 = time.perf_counter()
    L0 = 0.1
    recs = _resolutions(ParameterRule("SDE", c=1.0, L0=L0), (125, 250, 500, 1000), 1e-2, 1_000_000)
    const = resolution_constant(recs, "omega")
    elapsed = time.perf_counter() - t0
    limit = 1.10 * (4 * L0 + 2)
    ok = const <= limit and elapsed < 300
    report(8, "psi_SDE resolution", ok,
           f"top-half max R/omega = {const:.4f} <= {limit:.3f}; "
           + " ".join(f"{r.omega:g}:{r.R}" for r in recs) + f", {elapsed:.1f}s")
    assert ok


def test_criterion_09_bound_dominance(report):
    t0 = time.perf_counter()
    c = 0.5
    rule = ParameterRule("E", c=c)
    violations, checked, kink = [], 0, None
    for omega in (80, 110, 140):
        f = oscillatory(omega)
        n_star = (c * omega) ** 2
        ks, errs = [], []
        k = math.isqrt(int(n_star)) + 1
        while True:
            n = k * k
            err = measure_error(build_from_rule(f, rule, n), f).total
            if err < ERROR_FLOOR:
                break
            interior, endpoint = psi_e_resolution_bound(omega, n, c)
            bound = BOUND_PREFACTOR * (interior + endpoint)
            checked += 1
            if not err <= bound:
                violations.append((omega, n, err, bound))
            ks.append(k)
            errs.append(err)
            k += 1
        if omega == 80:
            ks, errs = np.array(ks), np.array(errs)
            tail = slice(len(ks) - len(ks) // 3, None)
            kink = np.polyfit(ks[tail], np.log(errs[tail]), 1)[0]
    elapsed = time.perf_counter() - t0
    ok_kink = abs(kink / -c - 1) <= 0.30
    ok = not violations and ok_kink and elapsed < 120
    report(9, "bound dominance", ok,
           f"{checked} points, {len(violations)} violations; kink slope at omega=80 {kink:.4f} "
           f"vs {-c} (ratio {kink / -c:.3f}), {elapsed:.1f}s")
    assert not violations, violations[:5]
    assert ok


def _efficiency(omega, n_max):
    se_opt, se = bench.efficiency("f1", omega, "SE", 0.2, 1e-8, n_max, jobs=JOBS)
    e_opt, e = bench.efficiency("f1", omega, "E", None, 1e-8, n_max, jobs=JOBS)
    return se_opt, se, e_opt, e


def test_criterion_10_efficiency(report):
    t0 = time.perf_counter()
    se_opt, se, e_opt, e = _efficiency(100.0, 1 << 17)
    elapsed = time.perf_counter() - t0
    ratio = se.R / e.R
    ok = ratio <= 0.25 and elapsed < 300
    report(10, "efficiency, f1 at omega=100", ok,
           f"n(1e-8): SE(L0=0.2, alpha0={se_opt.best_value:.4f}) {se.R}, "
           f"E(c={e_opt.best_value:.4f}) {e.R}, ratio {ratio:.3f} <= 0.25, {elapsed:.1f}s")
    assert ok


@pytest.mark.slow
def test_criterion_10_efficiency_full_scale(report):
    se_opt, se, e_opt, e = _efficiency(400.0, 1 << 20)
    factor = e.R / se.R
    ok = factor >= 4
    report(10, "efficiency, f1 at omega=400 (slow suite)", ok,
           f"n(1e-8): SE {se.R}, E {e.R}, E/SE = {factor:.1f} (claimed: 4 to 10)")
    assert ok


def test_criterion_11_special_functions(report):
    t0 = time.perf_counter()
    xs = np.concatenate([-np.geomspace(1 / math.e, 1e-12, 100), [0.0], np.geomspace(1e-12, 1e6, 99)])
    resid = max(abs(w * math.exp(w) - x) / max(1.0, abs(x)) for x in xs for w in [lambert_w0(x)])
    ws = [lambert_w0(x) for x in np.sort(xs)]
    mono = bool(np.all(np.diff(ws) > 0))
    u = np.linspace(0, 30, 601)
    sn_ok = True
    for k in (0.0, 0.3, 1 / math.sqrt(2), 0.95):
        sn = jacobi_sn(u, k)
        sn_ok &= bool(np.array_equal(jacobi_sn(-u, k), -sn) and np.all(np.abs(sn) <= 1))
    k = 1 / math.sqrt(2)
    K = float(mpmath.ellipk(0.5))
    sn_ok &= jacobi_sn(0.0, k) == 0.0 and abs(jacobi_sn(K, k) - 1) < 1e-14
    sn_ok &= bool(np.allclose(jacobi_sn(u, 0.0), np.sin(u), rtol=0, atol=0))
    mpmath.mp.dps = 60
    pts = [(2.0, 2.0), (-math.inf, 0.0), (800.0, -800.0)]
    refs = [mpmath.mpf(0), -mpmath.log(2), mpmath.log((1 + mpmath.exp(800)) / (1 + mpmath.exp(-800)))]
    lr = max(abs(log_ratio_1p_exp(a, b) - float(r)) / max(abs(float(r)), 1.0)
             for (a, b), r in zip(pts, refs))
    elapsed = time.perf_counter() - t0
    ok = resid <= 1e-13 and mono and sn_ok and lr <= 1e-13 and elapsed < 2
    report(11, "special functions", ok,
           f"W residual {resid:.1e}, W monotone {mono}, sn identities {sn_ok}, "
           f"log_ratio err {lr:.1e}, {elapsed:.2f}s")
    assert ok
