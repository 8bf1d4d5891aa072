"""Experiment runners behind the ``vartrans`` command line.

Each ``cmd_*`` function takes a :class:`RunConfig` and returns a
:class:`Table`.  Sweep points are independent tasks; they are farmed out to
a process pool and the merged rows are sorted, so the output does not
depend on completion order or on the number of workers.
"""

import csv
import io
import itertools
import json
import math
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .analysis import (
    SCALINGS,
    ResolutionNotFound,
    measure_resolution,
    oscillatory,
    rate_index,
    resolution_constant,
)
from .approximant import (
    RULE_VARIANTS,
    ParameterRule,
    SampleEvaluationError,
    build_from_rule,
    make_map,
    measure_error,
    select_parameters,
)
from .functions import REGISTRY, get_function
from .maps import MAP_KINDS, psi_forward, psi_inverse

SCHEMA_VERSION = 1

DEFAULT_C_RANGE = tuple(float(v) for v in np.geomspace(0.05, 5.0, 20))
DEFAULT_ALPHA0_RANGE = tuple(float(v) for v in np.linspace(0.1, 4.0, 20))
# default scaling of R(omega) per map family
DEFAULT_SCALING = {"E": "omega2", "SE": "omega", "DE": "omega_log", "SDE": "omega"}


class ConfigError(ValueError):
    """Invalid run configuration; ``path`` names the offending field."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class BudgetExceeded(RuntimeError):
    """The degree budget ran out before the target accuracy was reached."""

    def __init__(self, message, omega=None):
        self.omega = omega
        super().__init__(message)


class NumericFailure(ArithmeticError):
    pass


def n_schedule(n_min, n_max, count, spacing="sqrt"):
    """Increasing integer degrees from ``n_min`` to ``n_max``.

    ``spacing`` is ``"sqrt"`` (uniform in sqrt n), ``"linear"`` or
    ``"geometric"``.  Duplicates after rounding are dropped.
    """
    if n_min < 0 or n_max < n_min:
        raise ConfigError("n_schedule", f"need 0 <= n_min <= n_max, got {n_min}, {n_max}")
    if count < 1:
        raise ConfigError("n_schedule", "count must be >= 1")
    if count == 1:
        return (int(n_max),)
    if spacing == "sqrt":
        pts = np.linspace(math.sqrt(n_min), math.sqrt(n_max), count) ** 2
    elif spacing == "linear":
        pts = np.linspace(n_min, n_max, count)
    elif spacing == "geometric":
        pts = np.geomspace(max(n_min, 1), n_max, count)
    else:
        raise ConfigError("n_spacing", f"unknown spacing {spacing!r}")
    return tuple(sorted({int(round(p)) for p in pts}))


@dataclass(frozen=True)
class RunConfig:
    """Everything a run depends on.  Two equal configs give identical output."""

    command: str
    maps: tuple = ("E",)
    functions: tuple = ("x13",)
    c: tuple = ()
    alpha0: tuple = ()
    L0: tuple = ()
    n_schedule: tuple = ()
    omega: tuple = ()
    delta: float = 1e-2
    grid: int = 20000
    rule_variant: str = "theorem"
    scaling: str | None = None
    c_range: tuple = DEFAULT_C_RANGE
    alpha0_range: tuple = DEFAULT_ALPHA0_RANGE
    target: float | None = None
    jobs: int = 1

    def __post_init__(self):
        for name in ("maps", "functions", "c", "alpha0", "L0", "n_schedule", "omega",
                     "c_range", "alpha0_range"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    def validate(self):
        if self.command not in ("converge", "resolve", "compare", "optimize"):
            raise ConfigError("command", f"unknown command {self.command!r}")
        if not self.maps:
            raise ConfigError("maps", "at least one map is required")
        for i, kind in enumerate(self.maps):
            if kind not in MAP_KINDS:
                raise ConfigError(f"maps[{i}]", f"unknown map {kind!r}; expected one of {MAP_KINDS}")
        if self.command != "resolve":
            if not self.functions:
                raise ConfigError("functions", "at least one function is required")
            for i, fid in enumerate(self.functions):
                if fid not in REGISTRY:
                    raise ConfigError(f"functions[{i}]", f"unknown function id {fid!r}")
        for name in ("c", "alpha0", "L0"):
            for i, v in enumerate(getattr(self, name)):
                if not (math.isfinite(v) and v > 0):
                    raise ConfigError(f"{name}[{i}]", f"must be a positive number, got {v}")
        _check_increasing("n_schedule", self.n_schedule, allow_zero=True)
        if any(int(n) != n for n in self.n_schedule):
            raise ConfigError("n_schedule", "degrees must be integers")
        if self.command == "resolve":
            _check_increasing("omega", self.omega)
            for i, w in enumerate(self.omega):
                if w != int(w):
                    raise ConfigError(f"omega[{i}]", f"resolution frequencies must be integers, got {w}")
        elif self.omega and len(self.omega) != 1:
            raise ConfigError("omega", f"{self.command} takes a single frequency")
        if not 0 < self.delta < 1:
            raise ConfigError("delta", f"must lie in (0, 1), got {self.delta}")
        if self.grid < 2:
            raise ConfigError("grid", "must be >= 2")
        if self.rule_variant not in RULE_VARIANTS:
            raise ConfigError("rule_variant", f"must be one of {RULE_VARIANTS}")
        if self.scaling is not None and self.scaling not in SCALINGS:
            raise ConfigError("scaling", f"must be one of {sorted(SCALINGS)}")
        if self.command in ("optimize", "compare"):
            kinds = set(self.maps)
            if kinds & {"E", "DE", "SDE"}:
                _check_increasing("c_range", self.c_range)
            if "SE" in kinds:
                _check_increasing("alpha0_range", self.alpha0_range)
            if kinds & {"SE", "SDE"} and not self.L0:
                raise ConfigError("L0", "SE/SDE need at least one L0")
        if self.target is not None and not 0 < self.target < 1:
            raise ConfigError("target", "must lie in (0, 1)")
        if self.jobs < 1:
            raise ConfigError("jobs", "must be >= 1")
        return self

    def metadata(self):
        cfg = asdict(self)
        cfg.pop("jobs")  # worker count does not affect results
        return {
            "schema_version": SCHEMA_VERSION,
            "tool": "vartrans",
            "tool_version": __version__,
            "command": self.command,
            "rule_variant": self.rule_variant,
            "config": cfg,
        }


def _check_increasing(path, values, allow_zero=False):
    if not values:
        raise ConfigError(path, "schedule must be nonempty")
    for i, v in enumerate(values):
        if not math.isfinite(v) or v < 0 or (v == 0 and not allow_zero):
            raise ConfigError(f"{path}[{i}]", f"invalid value {v}")
        if i and not v > values[i - 1]:
            raise ConfigError(f"{path}[{i}]", "schedule must be strictly increasing")


@dataclass
class Table:
    columns: list
    rows: list = field(default_factory=list)
    footer: list = field(default_factory=list)


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render_csv(table, meta):
    """RFC-4180 text: a ``#`` JSON metadata line, header, rows, ``#`` footers."""
    buf = io.StringIO()
    buf.write("# " + json.dumps(meta, sort_keys=True) + "\r\n")
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(table.columns)
    for row in table.rows:
        w.writerow([_fmt(row.get(col)) for col in table.columns])
    for item in table.footer:
        buf.write("# " + json.dumps(item, sort_keys=True) + "\r\n")
    return buf.getvalue()


def read_csv(text):
    """Parse :func:`render_csv` output into (metadata, rows, footers)."""
    lines = text.splitlines()
    meta = json.loads(lines[0][2:])
    body = [ln for ln in lines[1:] if not ln.startswith("#")]
    footer = [json.loads(ln[2:]) for ln in lines[1:] if ln.startswith("#")]
    rows = list(csv.DictReader(body))
    return meta, rows, footer


# --- task plumbing -------------------------------------------------------

def _run_tasks(fn, tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(fn, tasks))


def _make_f(function_id, omega):
    return get_function(function_id)(omega)


def _capture(call):
    """Run ``call()``, returning (result, warning messages)."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        out = call()
    msgs = sorted({str(w.message) for w in caught if issubclass(w.category, UserWarning)})
    return out, "; ".join(msgs)


def _rules(config, kind):
    v = config.rule_variant
    if kind in ("E", "DE"):
        if not config.c:
            raise ConfigError("c", f"map {kind} needs at least one --c")
        return [ParameterRule(kind, c=c, variant=v) for c in config.c]
    if kind == "SE":
        if not config.alpha0 or not config.L0:
            raise ConfigError("alpha0" if not config.alpha0 else "L0", "map SE needs --alpha0 and --L0")
        return [ParameterRule("SE", alpha0=a, L0=l, variant=v)
                for a, l in itertools.product(config.alpha0, config.L0)]
    if not config.c or not config.L0:
        raise ConfigError("c" if not config.c else "L0", "map SDE needs --c and --L0")
    return [ParameterRule("SDE", c=c, L0=l, variant=v) for c, l in itertools.product(config.c, config.L0)]


def _rule_cols(rule):
    return {"c": rule.c, "alpha0": rule.alpha0, "L0": rule.L0}


def _params(rule, n):
    L, alpha = select_parameters(rule, max(n, 1))
    return L, alpha


def _map_order(kind):
    return MAP_KINDS.index(kind)


def predicted_rates(spec, rule):
    """(min, max) convergence index for ``rule`` and the function's constants, or Nones."""
    tau = spec.known_tau
    beta = {"E": spec.beta_E, "DE": spec.beta_DE}.get(rule.kind, 1.0)
    if tau is None or beta is None or not tau < 1:
        return None, None
    kw = dict(c=rule.c, alpha0=rule.alpha0, L0=rule.L0, beta=beta, tau=tau)
    return rate_index(rule.kind, **kw), rate_index(rule.kind, combine="max", **kw)


# --- converge ------------------------------------------------------------

CONVERGE_COLUMNS = ["map", "function", "omega", "c", "alpha0", "L0", "n", "L", "alpha",
                    "interior", "endpoint_lo", "endpoint_hi", "total",
                    "predicted_rate", "predicted_rate_max", "warnings"]


def _converge_task(task):
    fid, omega, rule, n, grid = task
    f = _make_f(fid, omega)
    L, alpha = _params(rule, n)

    def run():
        return measure_error(build_from_rule(f, rule, n), f, grid)

    try:
        rep, warn = _capture(run)
    except (SampleEvaluationError, ArithmeticError) as exc:
        raise NumericFailure(f"{fid}, {rule}, n={n}: {exc}") from exc
    lo, hi = predicted_rates(get_function(fid), rule)
    row = {"map": rule.kind, "function": fid, "omega": omega, **_rule_cols(rule), "n": n,
           "L": L, "alpha": alpha, "interior": rep.interior, "endpoint_lo": rep.endpoint_lo,
           "endpoint_hi": rep.endpoint_hi, "total": rep.total,
           "predicted_rate": lo, "predicted_rate_max": hi if rule.kind == "SDE" else None,
           "warnings": warn}
    return row


def _omega_for(config, fid):
    spec = get_function(fid)
    if not spec.oscillatory:
        return None
    return float(config.omega[0]) if config.omega else spec.default_omega


def _sort_key(row):
    return (_map_order(row["map"]), row.get("function") or "",
            tuple(-1.0 if row.get(k) is None else row[k] for k in ("c", "alpha0", "L0")),
            row.get("n") if row.get("n") is not None else -1,
            row.get("omega") or 0.0)


def cmd_converge(config):
    """Error against n for each (map, rule constants, function)."""
    config.validate()
    tasks = []
    for kind in config.maps:
        for rule in _rules(config, kind):
            for fid in config.functions:
                om = _omega_for(config, fid)
                tasks.extend((fid, om, rule, int(n), config.grid) for n in config.n_schedule)
    rows = _run_tasks(_converge_task, tasks, config.jobs)
    return Table(CONVERGE_COLUMNS, sorted(rows, key=_sort_key))


# --- resolve -------------------------------------------------------------

RESOLVE_COLUMNS = ["map", "c", "alpha0", "L0", "omega", "delta", "R", "n", "L", "alpha",
                   "achieved_error", "scaling", "ratio_to_scaling", "warnings"]


def _resolve_task(task):
    rule, omega, delta, n_max, grid = task
    f = oscillatory(omega)

    def run():
        return measure_resolution(lambda n: build_from_rule(f, rule, n), omega, delta, n_max, grid, f)

    try:
        rec, warn = _capture(run)
    except ResolutionNotFound as exc:
        return {"error": "budget", "omega": omega, "message": str(exc), "rule": rule}
    except (SampleEvaluationError, ArithmeticError) as exc:
        return {"error": "numeric", "omega": omega, "message": str(exc), "rule": rule}
    return {"rule": rule, "record": rec, "warnings": warn}


def cmd_resolve(config):
    """delta-resolution R(omega) per rule, plus a resolution-constant footer per rule."""
    config.validate()
    n_max = int(config.n_schedule[-1])
    tasks = [(rule, float(w), config.delta, n_max, config.grid)
             for kind in config.maps for rule in _rules(config, kind) for w in config.omega]
    results = _run_tasks(_resolve_task, tasks, config.jobs)
    for res in results:
        if res.get("error") == "budget":
            raise BudgetExceeded(f"{res['rule']}: {res['message']}", omega=res["omega"])
        if res.get("error") == "numeric":
            raise NumericFailure(f"{res['rule']}, omega={res['omega']}: {res['message']}")
    rows, footer = [], []
    by_rule = {}
    for res in results:
        by_rule.setdefault(res["rule"], []).append(res)
    for rule, group in by_rule.items():
        scaling = config.scaling or DEFAULT_SCALING[rule.kind]
        cc = rule.c if rule.c is not None else 1.0
        for res in group:
            rec = res["record"]
            L, alpha = _params(rule, rec.R)
            warn = res["warnings"]
            if rec.R < 2 * rec.omega:
                warn = "; ".join(x for x in (warn, "R below 2*omega") if x)
            rows.append({"map": rule.kind, **_rule_cols(rule), "omega": rec.omega,
                         "delta": rec.delta, "R": rec.R, "n": rec.R, "L": L, "alpha": alpha,
                         "achieved_error": rec.achieved_error, "scaling": scaling,
                         "ratio_to_scaling": rec.R / SCALINGS[scaling](rec.omega, cc),
                         "warnings": warn})
        records = [res["record"] for res in group]
        const = resolution_constant(records, scaling, cc) if len(records) >= 3 else None
        footer.append({"summary": "resolution_constant", "map": rule.kind, **_rule_cols(rule),
                       "scaling": scaling, "estimator": "max over upper half of omega",
                       "value": const})
    rows.sort(key=_sort_key)
    footer.sort(key=lambda d: (_map_order(d["map"]), json.dumps(d, sort_keys=True)))
    return Table(RESOLVE_COLUMNS, rows, footer)


# --- optimize ------------------------------------------------------------

OPTIMIZE_COLUMNS = ["map", "function", "omega", "L0", "param", "value", "n", "L", "alpha",
                    "total", "argmin", "warnings"]


def grid_argmin(values, errors):
    """Index of the smallest error; ties go to the smallest value.  NaN counts as +inf."""
    if len(values) == 0:
        raise ConfigError("range", "search range is empty")
    if len(values) != len(errors):
        raise ValueError("values and errors differ in length")
    errs = [math.inf if (e is None or math.isnan(e)) else e for e in errors]
    order = sorted(range(len(values)), key=lambda i: (errs[i], values[i]))
    return order[0]


def _rule_with(kind, value, L0, variant):
    if kind == "SE":
        return ParameterRule("SE", alpha0=value, L0=L0, variant=variant)
    if kind == "SDE":
        return ParameterRule("SDE", c=value, L0=L0, variant=variant)
    return ParameterRule(kind, c=value, variant=variant)


def _error_task(task):
    fid, omega, rule, n, grid = task
    f = _make_f(fid, omega)
    try:
        rep, warn = _capture(lambda: measure_error(build_from_rule(f, rule, n), f, grid))
        return rep.total, warn
    except (SampleEvaluationError, ArithmeticError, ValueError) as exc:
        return math.inf, f"failed: {exc}"


@dataclass(frozen=True)
class OptimizeResult:
    kind: str
    L0: float | None
    n: int
    param: str
    values: tuple
    errors: tuple
    warnings: tuple
    best_index: int

    @property
    def best_value(self):
        return self.values[self.best_index]

    @property
    def best_error(self):
        return self.errors[self.best_index]


def optimize_constant(fid, omega, kind, L0, n, values, grid=20000, variant="theorem", jobs=1):
    """Grid search of the free constant (``alpha0`` for SE, ``c`` otherwise) at degree ``n``."""
    values = tuple(sorted(float(v) for v in values))
    if not values:
        raise ConfigError("range", "search range is empty")
    tasks = [(fid, omega, _rule_with(kind, v, L0, variant), n, grid) for v in values]
    out = _run_tasks(_error_task, tasks, jobs)
    errors = tuple(e for e, _ in out)
    return OptimizeResult(kind, L0, n, "alpha0" if kind == "SE" else "c", values, errors,
                          tuple(w for _, w in out), grid_argmin(values, errors))


def _optimize_jobs(config):
    """(kind, L0) pairs to optimize, in output order."""
    for kind in config.maps:
        for L0 in (config.L0 if kind in ("SE", "SDE") else (None,)):
            yield kind, L0


def _range_for(config, kind):
    return config.alpha0_range if kind == "SE" else config.c_range


def cmd_optimize(config):
    """Grid search of each map's constant at the largest scheduled degree."""
    config.validate()
    n = int(config.n_schedule[-1])
    rows, footer = [], []
    for fid in config.functions:
        om = _omega_for(config, fid)
        for kind, L0 in _optimize_jobs(config):
            res = optimize_constant(fid, om, kind, L0, n, _range_for(config, kind),
                                    config.grid, config.rule_variant, config.jobs)
            for i, (v, e, w) in enumerate(zip(res.values, res.errors, res.warnings)):
                L, alpha = _params(_rule_with(kind, v, L0, config.rule_variant), n)
                rows.append({"map": kind, "function": fid, "omega": om, "L0": L0,
                             "param": res.param, "value": v, "n": n, "L": L, "alpha": alpha,
                             "total": e, "argmin": i == res.best_index, "warnings": w})
            footer.append({"summary": "argmin", "map": kind, "function": fid, "L0": L0,
                           "param": res.param, "value": res.best_value,
                           "total": res.best_error, "n": n})
    rows.sort(key=lambda r: (_map_order(r["map"]), r["function"], r["L0"] or 0.0, r["value"]))
    footer.sort(key=lambda d: (_map_order(d["map"]), d["function"], d["L0"] or 0.0))
    return Table(OPTIMIZE_COLUMNS, rows, footer)


# --- compare -------------------------------------------------------------

COMPARE_COLUMNS = ["function", "omega", "map", "L0", "param", "value", "n", "L", "alpha",
                   "interior", "endpoint_lo", "endpoint_hi", "total",
                   "symmetry_residual", "roundtrip_residual", "warnings"]


def map_residuals(m, L, n):
    """Symmetry and round-trip residuals of the map at the sample points ``L y_j``.

    Round trip is checked for the left half (``s <= 0``), where the inverse
    keeps full relative precision, and skips saturated points.
    """
    s = L * (np.linspace(-1.0, 1.0, n + 1) if n > 0 else np.array([0.0]))
    xs = np.asarray(psi_inverse(m, s))
    sym = float(np.max(np.abs(xs + np.asarray(psi_inverse(m, -s)) - 1.0)))
    left = s[s <= 0]
    xl = np.asarray(psi_inverse(m, left))
    ok = xl > 0
    rt = 0.0
    if np.any(ok):
        back = np.asarray(psi_forward(m, xl[ok]))
        rt = float(np.max(np.abs(back - left[ok]) / np.maximum(1.0, np.abs(left[ok]))))
    return sym, rt


def _compare_task(task):
    fid, omega, rule, n, grid = task
    f = _make_f(fid, omega)
    L, alpha = _params(rule, n)
    try:
        rep, warn = _capture(lambda: measure_error(build_from_rule(f, rule, n), f, grid))
    except (SampleEvaluationError, ArithmeticError) as exc:
        raise NumericFailure(f"{fid}, {rule}, n={n}: {exc}") from exc
    # the same guideline warning is already in ``warn`` from the build above
    (sym, rt), _ = _capture(lambda: map_residuals(make_map(rule.kind, alpha), L, n))
    return {"function": fid, "omega": omega, "map": rule.kind, "L0": rule.L0,
            "param": "alpha0" if rule.kind == "SE" else "c",
            "value": rule.alpha0 if rule.kind == "SE" else rule.c, "n": n, "L": L,
            "alpha": alpha, "interior": rep.interior, "endpoint_lo": rep.endpoint_lo,
            "endpoint_hi": rep.endpoint_hi, "total": rep.total, "symmetry_residual": sym,
            "roundtrip_residual": rt, "warnings": warn}


def n_to_target(fid, omega, rule, target, n_max, grid=20000):
    """Smallest degree (to within the search's step) whose total error is <= ``target``."""
    f = _make_f(fid, omega)
    try:
        return measure_resolution(lambda n: build_from_rule(f, rule, n), omega or 0.0, target,
                                  n_max, grid, f)
    except ResolutionNotFound as exc:
        raise BudgetExceeded(str(exc), omega=omega) from exc


def efficiency(fid, omega, kind, L0, target, n_max, n_start=64, grid=20000, variant="theorem",
               values=None, jobs=1):
    """Degrees needed to reach ``target`` with an optimized constant.

    The optimization budget doubles from ``n_start`` until the optimized
    error is within ``target``; the constant found there is then used to
    locate the smallest degree reaching ``target``.  Returns
    ``(OptimizeResult, ResolutionRecord)``.
    """
    if values is None:
        values = DEFAULT_ALPHA0_RANGE if kind == "SE" else DEFAULT_C_RANGE
    budget = n_start
    while True:
        opt = optimize_constant(fid, omega, kind, L0, budget, values, grid, variant, jobs)
        if opt.best_error <= target:
            break
        budget *= 2
        if budget > n_max:
            raise BudgetExceeded(f"{kind}: optimized error {opt.best_error:.3g} > {target:g} "
                                 f"at n={budget // 2}", omega=omega)
    rule = _rule_with(kind, opt.best_value, L0, variant)
    return opt, n_to_target(fid, omega, rule, target, budget, grid)


def cmd_compare(config):
    """Error against n for each function and map, with constants optimized at the largest n."""
    config.validate()
    n_top = int(config.n_schedule[-1])
    tasks, footer = [], []
    for fid in config.functions:
        om = _omega_for(config, fid)
        for kind, L0 in _optimize_jobs(config):
            opt = optimize_constant(fid, om, kind, L0, max(n_top, 1), _range_for(config, kind),
                                    config.grid, config.rule_variant, config.jobs)
            rule = _rule_with(kind, opt.best_value, L0, config.rule_variant)
            tasks.extend((fid, om, rule, int(n), config.grid) for n in config.n_schedule)
            item = {"summary": "optimized", "function": fid, "map": kind, "L0": L0,
                    "param": opt.param, "value": opt.best_value, "n": n_top,
                    "total": opt.best_error}
            if config.target is not None:
                try:
                    rec, _ = _capture(lambda: n_to_target(fid, om, rule, config.target, n_top,
                                                          config.grid))
                    item["n_at_target"] = rec.R
                except BudgetExceeded:
                    item["n_at_target"] = None
                item["target"] = config.target
            footer.append(item)
    rows = _run_tasks(_compare_task, tasks, config.jobs)
    rows.sort(key=lambda r: (_map_order(r["map"]), r["function"], r["L0"] or 0.0, r["n"]))
    footer.sort(key=lambda d: (_map_order(d["map"]), d["function"], d["L0"] or 0.0))
    return Table(COMPARE_COLUMNS, rows, footer)


COMMANDS = {"converge": cmd_converge, "resolve": cmd_resolve, "compare": cmd_compare,
            "optimize": cmd_optimize}


def run(config):
    return COMMANDS[config.command](config)


def default_jobs():
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1
