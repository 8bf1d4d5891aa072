"""``vartrans`` command line: converge, resolve, compare and optimize sweeps.

Exit codes: 0 success, 2 configuration error, 3 degree budget exceeded,
4 numerical failure.
"""

import argparse
import sys

import numpy as np

from . import bench
from .bench import BudgetExceeded, ConfigError, NumericFailure, RunConfig

EXIT_OK, EXIT_CONFIG, EXIT_BUDGET, EXIT_NUMERIC = 0, 2, 3, 4

_N_DEFAULTS = {"converge": 900, "resolve": 200_000, "compare": 1024, "optimize": 1024}


def _floats(text):
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _omegas(text):
    """``20,40,60`` or ``start:stop:step`` (inclusive)."""
    if ":" in text:
        try:
            a, b, s = (float(t) for t in text.split(":"))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected start:stop:step, got {text!r}") from None
        if s <= 0:
            raise argparse.ArgumentTypeError("step must be positive")
        return tuple(float(v) for v in np.arange(a, b + 0.5 * s, s))
    return _floats(text)


def _range(text):
    """``lo:hi:count``, or an explicit comma list."""
    if ":" in text:
        try:
            lo, hi, k = text.split(":")
            return float(lo), float(hi), int(k)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected lo:hi:count, got {text!r}") from None
    return _floats(text)


def _names(text):
    return tuple(t.strip() for t in text.split(",") if t.strip())


def build_parser():
    p = argparse.ArgumentParser(prog="vartrans", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {bench.__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    helps = {
        "converge": "error against n for fixed parameter-rule constants",
        "resolve": "delta-resolution R(omega) and resolution constants",
        "compare": "all maps on f1, f2, f3 with optimized constants",
        "optimize": "grid search of the free constant at the largest n",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, help=text, description=text)
        sp.add_argument("--map", type=_names, default=None,
                        help="map kinds, comma separated (E, SE, DE, SDE)")
        sp.add_argument("--function", type=_names, default=None,
                        help="function ids from the registry, comma separated")
        sp.add_argument("--c", type=_floats, default=())
        sp.add_argument("--alpha0", type=_floats, default=())
        sp.add_argument("--L0", type=_floats, default=())
        sp.add_argument("--n-max", type=int, default=_N_DEFAULTS[name])
        sp.add_argument("--n-min", type=int, default=16 if name == "converge" else 1)
        sp.add_argument("--n-count", type=int, default=20)
        sp.add_argument("--n-spacing", choices=("sqrt", "linear", "geometric"), default="sqrt")
        sp.add_argument("--n", type=_floats, default=None, dest="n_list",
                        help="explicit degree list; overrides --n-min/--n-count")
        sp.add_argument("--omega", type=_omegas, default=(),
                        help="frequency (or resolve schedule: list or start:stop:step)")
        sp.add_argument("--delta", type=float, default=1e-2)
        sp.add_argument("--grid", type=int, default=20000)
        sp.add_argument("--rule-variant", choices=bench.RULE_VARIANTS, default="theorem")
        sp.add_argument("--scaling", choices=sorted(bench.SCALINGS), default=None)
        sp.add_argument("--c-range", type=_range, default=None, help="lo:hi:count (log spaced)")
        sp.add_argument("--alpha0-range", type=_range, default=None, help="lo:hi:count")
        sp.add_argument("--target", type=float, default=None,
                        help="compare: also report the smallest n reaching this error")
        sp.add_argument("--out", default=None, help="output CSV path (default stdout)")
        sp.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: available CPUs)")
        sp.add_argument("--gnuplot", default=None, metavar="PATH",
                        help="also write a gnuplot script plotting --out")
    return p


def _expand_range(value, log):
    if value is None:
        return None
    if len(value) == 3 and isinstance(value[2], int):
        lo, hi, k = value
        if k < 1 or hi < lo or lo <= 0:
            return ()
        pts = np.geomspace(lo, hi, k) if log else np.linspace(lo, hi, k)
        return tuple(float(v) for v in pts)
    return tuple(value)


def config_from_args(args):
    cmd = args.command
    maps = args.map
    if maps is None:
        maps = bench.MAP_KINDS if cmd == "compare" else ("E",)
    functions = args.function
    if functions is None:
        functions = ("f1", "f2", "f3") if cmd == "compare" else ("x13",)
    if args.n_list is not None:
        sched = args.n_list
    elif cmd in ("resolve", "optimize"):
        sched = (args.n_max,)
    else:
        sched = bench.n_schedule(args.n_min, args.n_max, args.n_count, args.n_spacing)
    L0 = args.L0
    if not L0 and cmd == "compare":
        L0 = (0.2, 0.8, 1.5)
    kw = {}
    c_range = _expand_range(args.c_range, log=True)
    if c_range is not None:
        kw["c_range"] = c_range
    a_range = _expand_range(args.alpha0_range, log=False)
    if a_range is not None:
        kw["alpha0_range"] = a_range
    return RunConfig(
        command=cmd, maps=tuple(maps), functions=tuple(functions), c=args.c,
        alpha0=args.alpha0, L0=L0, n_schedule=tuple(sched), omega=args.omega,
        delta=args.delta, grid=args.grid, rule_variant=args.rule_variant,
        scaling=args.scaling, target=args.target,
        jobs=args.jobs if args.jobs is not None else bench.default_jobs(), **kw,
    )


_PLOTS = {
    "converge": ("sqrt(n)", "(sqrt(column('n'))):(column('total'))", "total error"),
    "resolve": ("omega", "(column('omega')):(column('ratio_to_scaling'))", "R / scaling"),
    "compare": ("n", "(column('n')):(column('total'))", "total error"),
    "optimize": ("constant", "(column('value')):(column('total'))", "total error"),
}


def gnuplot_script(command, csv_path):
    xlabel, using, ylabel = _PLOTS[command]
    logy = "set logscale y\n" if ylabel == "total error" else ""
    return (
        "# generated by vartrans; plots the CSV written by the same run\n"
        "set datafile separator ','\n"
        "set datafile commentschars '#'\n"
        "set key autotitle columnhead\n"
        f"set xlabel '{xlabel}'\nset ylabel '{ylabel}'\n{logy}"
        f"plot '{csv_path}' using {using} with points title '{command}'\n"
    )


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.gnuplot and not args.out:
            raise ConfigError("gnuplot", "--gnuplot needs --out so the script can reference the CSV")
        config = config_from_args(args)
        table = bench.run(config)
    except ConfigError as exc:
        print(f"vartrans: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BudgetExceeded as exc:
        where = f" (omega={exc.omega:g})" if exc.omega is not None else ""
        print(f"vartrans: budget exceeded{where}: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NumericFailure, ArithmeticError) as exc:
        print(f"vartrans: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    text = bench.render_csv(table, config.metadata())
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.gnuplot:
        with open(args.gnuplot, "w") as fh:
            fh.write(gnuplot_script(config.command, args.out))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
