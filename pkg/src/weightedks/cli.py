"""Command-line interface.

Subcommands: test (run the GoF test on a data file), critical (thresholds),
tabulate (spectral table as CSV), curves (survival curves as CSV), and
simulate (Monte Carlo oracles as CSV).  Data goes to stdout or --out;
diagnostics go to stderr.  Exit codes: 0 computed, 2 usage or input error,
3 rejection under --strict.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import warnings
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .distribution import (QuantileWindow, critical_value,
                           ks_classical_critical_value, survival_cdf)
from .errors import EmptyWindowError, WeightedKSError
from .montecarlo import SimulationConfig, direct_survival, ou_survival_profile
from .spectral import (ground_rate_large_k, ground_rate_small_k, ground_state,
                       prefactor_large_k, prefactor_small_k)
from .statistic import NullDistribution, run_test

SEED_ENV = "WEIGHTEDKS_SEED"


def _fmt(x: float) -> str:
    return format(float(x), ".15g")


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(lines: Sequence[str], out: Optional[str]) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def read_data(path: str, column: Optional[str] = None) -> np.ndarray:
    """Load one value per line, or one delimited column below a header row.

    Lines starting with '#' and blank lines are skipped.  Parse failures
    report the offending line number.
    """
    values = []
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.readlines()
    start = 0
    col_idx = None
    delim = None
    if column is not None:
        if not lines:
            raise ValueError("empty file, expected a header row")
        header = lines[0].strip()
        delim = "," if "," in header else None
        names = [h.strip() for h in header.split(delim)]
        if column in names:
            col_idx = names.index(column)
        else:
            try:
                col_idx = int(column)
            except ValueError:
                raise ValueError(
                    f"column {column!r} not found in header {names}") from None
        start = 1
    for lineno, raw in enumerate(lines[start:], start=start + 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        field = line.split(delim)[col_idx] if col_idx is not None else line
        try:
            value = float(field)
        except ValueError:
            raise ValueError(f"line {lineno}: not a number: {field!r}") from None
        if not math.isfinite(value):
            raise ValueError(f"line {lineno}: non-finite value {field!r}")
        values.append(value)
    if not values:
        raise ValueError(f"no data in {path}")
    return np.asarray(values)


def _parse_window(spec: str) -> QuantileWindow:
    parts = spec.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected --window a,b; got {spec!r}")
    a, b = float(parts[0]), float(parts[1])
    window = QuantileWindow(a, b)
    if window.a == window.b:
        raise EmptyWindowError(
            f"empty window: [{a}, {b}] contains no quantile interval to test")
    return window


def _resolve_seed(value: Optional[int]) -> int:
    if value is not None:
        return value
    env = os.environ.get(SEED_ENV)
    return int(env) if env else 0


def cmd_test(args: argparse.Namespace) -> int:
    data = read_data(args.data, args.column)
    null = NullDistribution.from_spec(args.null)
    window = _parse_window(args.window) if args.window else None
    report = run_test(data, null, alpha=args.alpha, window=window)
    for note in report.warnings:
        print(f"warning: {note}", file=sys.stderr)
    doc = {
        "input": {"count": int(data.size), "min": float(data.min()),
                  "max": float(data.max())},
        "null": null.spec(),
        "alpha": report.alpha,
        "window": {"a": report.window.a, "b": report.window.b,
                   "horizon": report.window.horizon},
        "statistic": report.statistic,
        "argmax_quantile": report.argmax_quantile,
        "critical_value": report.critical_value,
        "pvalue": report.pvalue,
        "reject": report.reject,
        "warnings": list(report.warnings),
        "version": __version__,
        "seed": None,
    }
    if args.format == "json":
        _emit([json.dumps(doc, indent=2)], args.out)
    else:
        lines = [
            f"n               {doc['input']['count']}",
            f"data range      [{_fmt(doc['input']['min'])}, {_fmt(doc['input']['max'])}]",
            f"null            {doc['null']}",
            f"window          [{_fmt(report.window.a)}, {_fmt(report.window.b)}]"
            f"  horizon {_fmt(report.window.horizon)}",
            f"statistic       {_fmt(report.statistic)}",
            f"argmax quantile {_fmt(report.argmax_quantile)}",
            f"critical value  {_fmt(report.critical_value)} (alpha={_fmt(report.alpha)})",
            f"pvalue          {_fmt(report.pvalue)}",
            f"reject          {'yes' if report.reject else 'no'}",
        ]
        _emit(lines, args.out)
    if args.strict and report.reject:
        return 3
    return 0


def cmd_critical(args: argparse.Namespace) -> int:
    if args.classical:
        value = ks_classical_critical_value(args.alpha)
    else:
        value = critical_value(args.n, args.alpha)
    _emit([_fmt(value)], args.out)
    return 0


def cmd_tabulate(args: argparse.Namespace) -> int:
    if not (0.05 <= args.k_min < args.k_max <= 7.0):
        raise ValueError(f"need 0.05 <= k-min < k-max <= 7; got "
                         f"[{args.k_min}, {args.k_max}]")
    grid = np.linspace(args.k_min, args.k_max, args.steps)
    lines = ["k,ground_rate,excited_rate,gap,prefactor,"
             "ground_rate_small_k,ground_rate_large_k,"
             "prefactor_small_k,prefactor_large_k"]
    for k in grid:
        state = ground_state(float(k))
        lines.append(",".join(_fmt(v) for v in (
            k, state.ground_rate, state.excited_rate, state.gap,
            state.prefactor, ground_rate_small_k(k), ground_rate_large_k(k),
            prefactor_small_k(k), prefactor_large_k(k))))
    _emit(lines, args.out)
    return 0


def cmd_curves(args: argparse.Namespace) -> int:
    n_list = [float(tok) for tok in args.n_list.split(",")]
    if any(n < 2 for n in n_list):
        raise ValueError("every n must be >= 2")
    if not (0.05 <= args.k_min < args.k_max <= 7.0):
        raise ValueError(f"need 0.05 <= k-min < k-max <= 7; got "
                         f"[{args.k_min}, {args.k_max}]")
    grid = np.linspace(args.k_min, args.k_max, args.steps)
    header = "k," + ",".join(f"survival_n{n:g}" for n in n_list)
    lines = [header]
    for k in grid:
        row = [k] + [survival_cdf(n, float(k)) for n in n_list]
        lines.append(",".join(_fmt(v) for v in row))
    _emit(lines, args.out)
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    config = SimulationConfig(replicas=args.replicas, seed=seed, dt=args.dt)
    lines = ["parameter,survival,std_error"]
    if args.mode == "direct":
        if args.n is None or args.k is None:
            raise ValueError("direct mode needs --n and --k")
        k_grid = [float(tok) for tok in args.k.split(",")]
        estimates = direct_survival(int(args.n), k_grid, config)
    else:
        if args.k is None or args.t is None:
            raise ValueError("ou mode needs --k and --t")
        k_values = [float(tok) for tok in args.k.split(",")]
        if len(k_values) != 1:
            raise ValueError("ou mode takes a single --k")
        horizons = [float(tok) for tok in args.t.split(",")]
        estimates = ou_survival_profile(k_values[0], horizons, config)
    for est in estimates:
        lines.append(",".join(_fmt(v) for v in
                              (est.param, est.survival, est.std_error)))
    _emit(lines, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weightedks",
        description="Tail-sensitive goodness-of-fit testing with the "
                    "variance-weighted Kolmogorov-Smirnov statistic.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_test = sub.add_parser("test", help="run the test on a data file")
    p_test.add_argument("--data", required=True, help="one value per line; "
                        "'#' comments ignored")
    p_test.add_argument("--null", required=True,
                        help="uniform | normal:mu,sigma | exp:rate | pit")
    p_test.add_argument("--alpha", type=float, default=0.05)
    p_test.add_argument("--window", help="quantile window a,b (default "
                        "[1/(n+1), n/(n+1)])")
    p_test.add_argument("--column", help="column name or 0-based index for "
                        "delimited files with a header row")
    p_test.add_argument("--format", choices=("json", "text"), default="text")
    p_test.add_argument("--strict", action="store_true",
                        help="exit 3 when the null is rejected")
    p_test.add_argument("--out")
    p_test.set_defaults(func=cmd_test)

    p_crit = sub.add_parser("critical", help="critical value k*(n, alpha)")
    p_crit.add_argument("--n", type=float, default=None)
    p_crit.add_argument("--alpha", type=float, default=0.05)
    p_crit.add_argument("--classical", action="store_true",
                        help="classical Kolmogorov-Smirnov threshold instead")
    p_crit.add_argument("--out")
    p_crit.set_defaults(func=cmd_critical)

    p_tab = sub.add_parser("tabulate", help="spectral table as CSV")
    p_tab.add_argument("--k-min", type=float, required=True)
    p_tab.add_argument("--k-max", type=float, required=True)
    p_tab.add_argument("--steps", type=int, required=True)
    p_tab.add_argument("--out")
    p_tab.set_defaults(func=cmd_tabulate)

    p_cur = sub.add_parser("curves", help="survival curves per sample size as CSV")
    p_cur.add_argument("--n-list", required=True,
                       help="comma list of sample sizes, e.g. 1e3,1e4")
    p_cur.add_argument("--k-min", type=float, required=True)
    p_cur.add_argument("--k-max", type=float, required=True)
    p_cur.add_argument("--steps", type=int, required=True)
    p_cur.add_argument("--out")
    p_cur.set_defaults(func=cmd_curves)

    p_sim = sub.add_parser("simulate", help="Monte Carlo survival estimates as CSV")
    p_sim.add_argument("--mode", choices=("direct", "ou"), required=True)
    p_sim.add_argument("--n", type=float, help="sample size (direct mode)")
    p_sim.add_argument("--k", help="threshold grid (direct) or wall (ou), comma list")
    p_sim.add_argument("--t", help="horizon or comma list of horizons (ou mode)")
    p_sim.add_argument("--dt", type=float, default=1e-3)
    p_sim.add_argument("--replicas", type=int, default=10_000)
    p_sim.add_argument("--seed", type=int, default=None,
                       help=f"defaults to ${SEED_ENV} or 0")
    p_sim.add_argument("--out")
    p_sim.set_defaults(func=cmd_simulate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "critical" and not args.classical and args.n is None:
        return _fail("critical needs --n (or --classical)")
    try:
        # route library warnings to the diagnostic stream, never into data
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args)
        for note in caught:
            print(f"warning: {note.message}", file=sys.stderr)
        return code
    except (WeightedKSError, ValueError, OSError) as exc:
        return _fail(str(exc))


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
