"""Command-line front end: fidelities, curves, optimal gains, figure data, checks.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .fidelity import fidelity, fidelity_joint, fidelity_single_photon, fidelity_vacuum, sample_curve
from .gainopt import CoherentFixedAmp, PhotonicQubit, improvement_table, optimal_gain_vs_intensity
from .inputs import Coherent, PolarizationQubit, SinglePhoton, Vacuum
from .verify import published_notes, run_suite

FIGURES = ("2a", "2b", "2c", "3", "4", "5", "6", "7", "8")
CAPTION_Q = (0.99, 0.75, 0.5, 0.25, 0.0)
CAPTION_INTENSITIES = (0.0, 1.0, 10.0, 100.0)

FORMULAS = {
    "coherent": "F = (1-q^2)/W exp(-(1-q^2)(1-g)^2|alpha|^2/W), W = 1-2qg+g^2",
    "vacuum": "F = (1-q^2)/W, W = 1-2qg+g^2",
    "photon": "F = (1-q^2)/W^3 ((g-q)^2(1-qg)^2 + g^2(1-q^2)^2)",
    "qubit": "F = (1-q^2)^2/W^4 ((g-q)^2(1-qg)^2 + g^2(1-q^2)^2) = F_vacuum F_photon",
}


class UsageError(ValueError):
    pass


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"expected re[,im], got {text!r}")
    try:
        vals = [float(x) for x in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected re[,im], got {text!r}") from None
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def parse_grid(text: str) -> list[float]:
    """lo:hi:step, inclusive of hi when it lands on the grid."""
    try:
        lo, hi, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi:step, got {text!r}") from None
    if step <= 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}")
    n = int(np.floor((hi - lo) / step + 1e-9)) + 1
    return [round(lo + i * step, 12) for i in range(n)]


def parse_range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None
    if not lo < hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def make_input(name: str, alpha: complex | None):
    if name == "coherent":
        if alpha is None:
            raise UsageError("--input coherent needs --alpha")
        return Coherent(alpha)
    if name == "vacuum":
        return Vacuum()
    if name == "photon":
        return SinglePhoton()
    return PolarizationQubit(1.0, 0.0)


def fmt(x, precision: int):
    return float(f"{float(x):.{precision}g}")


def emit(args, columns, rows, meta=()):
    precision = args.precision
    rows = [[fmt(v, precision) for v in row] for row in rows]
    if args.format == "json":
        config = {k: v for k, v in sorted(vars(args).items()) if k != "func" and v is not None}
        text = json.dumps({"config": config, "columns": list(columns), "rows": rows}, default=str) + "\n"
    else:
        buf = io.StringIO()
        for line in meta:
            buf.write(f"# {line}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([repr(v) for v in row])
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _q_values(args) -> list[float]:
    if args.q_grid is not None:
        return args.q_grid
    if args.q is None:
        raise UsageError("need --q or --q-grid")
    return [args.q]


def cmd_fidelity(args) -> int:
    if args.q is None or args.gain is None:
        raise UsageError("fidelity needs --q and --gain")
    inp = make_input(args.input, args.alpha)
    value = float(fidelity(inp, args.q, args.gain))
    if args.format == "json" or args.out:
        emit(args, ["q", "g", "F"], [[args.q, args.gain, value]], [FORMULAS[args.input]])
    else:
        print(repr(fmt(value, args.precision)))
        print(f"# {args.input}: {FORMULAS[args.input]}")
    return 0


def _curve_rows(inp, qs, g_range, steps):
    rows = []
    for q in qs:
        c = sample_curve(inp, q, g_range, steps)
        rows.extend([q, g, f] for g, f in c.samples)
    return rows


def cmd_curve(args) -> int:
    inp = make_input(args.input, args.alpha)
    rows = _curve_rows(inp, _q_values(args), args.gain_range, args.steps)
    meta = [f"input={args.input}" + (f" alpha={args.alpha}" if args.alpha is not None else ""), FORMULAS[args.input]]
    emit(args, ["q", "g", "F"], rows, meta)
    return 0


def _opt_rows(results):
    return [[r.q, r.g_opt, r.F_opt, r.F_unit, r.delta_F, r.residual] for r in results]


OPT_COLUMNS = ["q", "g_opt", "F_opt", "F_unit", "delta_F", "residual"]


def cmd_optimal_gain(args) -> int:
    if args.family == "qubit":
        emit(args, OPT_COLUMNS, _opt_rows(improvement_table(PhotonicQubit(), _q_values(args))), ["family=qubit"])
        return 0
    if args.alpha_sq_grid is not None:
        if args.q is None:
            raise UsageError("intensity sweep needs a single --q")
        results = optimal_gain_vs_intensity(args.q, args.alpha_sq_grid)
        rows = [[a, r.g_opt, r.F_opt, r.F_unit, r.delta_F, r.residual] for a, r in zip(args.alpha_sq_grid, results)]
        emit(args, ["alpha_sq"] + OPT_COLUMNS[1:], rows, [f"family=coherent q={args.q}"])
        return 0
    if args.alpha_sq is None:
        raise UsageError("--family coherent needs --alpha-sq or --alpha-sq-grid")
    results = improvement_table(CoherentFixedAmp(args.alpha_sq), _q_values(args))
    emit(args, OPT_COLUMNS, _opt_rows(results), [f"family=coherent alpha_sq={args.alpha_sq}"])
    return 0


def figure_table(fig: str, q_grid=None, g_range=(0.0, 2.0), steps=201):
    """(columns, rows, metadata) with the caption parameters as defaults."""
    q_sweep = q_grid or [round(0.01 * i, 2) for i in range(100)]
    if fig in ("2a", "2b", "2c"):
        inp = {"2a": Coherent(1.0), "2b": Vacuum(), "2c": SinglePhoton()}[fig]
        qs = q_grid or list(CAPTION_Q)
        return ["q", "g", "F"], _curve_rows(inp, qs, g_range, steps), [f"figure {fig}: {type(inp).__name__}"]
    if fig == "3":
        rows = []
        for a2 in CAPTION_INTENSITIES:
            c = sample_curve(Coherent(np.sqrt(a2)), 0.5, g_range, steps)
            rows.extend([a2, g, f] for g, f in c.samples)
        return ["alpha_sq", "g", "F"], rows, ["figure 3: coherent, q=0.5"]
    if fig == "4":
        grid = [round(0.1 * i, 1) for i in range(201)]
        return ["alpha_sq", "g_opt"], [[a, r.g_opt] for a, r in zip(grid, optimal_gain_vs_intensity(0.5, grid))], [
            "figure 4: coherent optimal gain vs intensity, q=0.5"
        ]
    if fig == "5":
        return OPT_COLUMNS, _opt_rows(improvement_table(CoherentFixedAmp(1.0), q_sweep)), ["figure 5: coherent |alpha|^2=1"]
    if fig == "6":
        g = np.linspace(g_range[0], g_range[1], steps)
        f0, f1, fj = fidelity_vacuum(0.5, g), fidelity_single_photon(0.5, g), fidelity_joint(0.5, g)
        return ["g", "F_vacuum", "F_photon", "F_joint"], np.column_stack([g, f0, f1, fj]).tolist(), ["figure 6: q=0.5"]
    if fig == "7":
        qubit = improvement_table(PhotonicQubit(), q_sweep)
        coh = improvement_table(CoherentFixedAmp(1.0), q_sweep)
        rows = [[a.q, a.g_opt, b.g_opt] for a, b in zip(qubit, coh)]
        return ["q", "g_opt_qubit", "g_opt_coherent"], rows, ["figure 7: optimal gain vs q"]
    if fig == "8":
        return OPT_COLUMNS, _opt_rows(improvement_table(PhotonicQubit(), q_sweep)), ["figure 8: photonic qubit"]
    raise UsageError(f"unknown figure {fig!r}")


def cmd_figure(args) -> int:
    columns, rows, meta = figure_table(args.id, args.q_grid, args.gain_range, args.steps)
    emit(args, columns, rows, meta)
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.quad_points, args.dim, args.seed)
    if args.suite != "all":
        checks += published_notes()
    for c in checks:
        print(c.line())
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", choices=["coherent", "vacuum", "photon", "qubit"], default="vacuum")
    common.add_argument("--alpha", type=parse_complex)
    common.add_argument("--alpha-sq", type=float)
    qg = common.add_mutually_exclusive_group()
    qg.add_argument("--q", type=float)
    qg.add_argument("--q-grid", type=parse_grid)
    gg = common.add_mutually_exclusive_group()
    gg.add_argument("--gain", type=float)
    gg.add_argument("--gain-range", type=parse_range, default=(0.0, 2.0))
    common.add_argument("--steps", type=int, default=201)
    common.add_argument("--dim", type=int)
    common.add_argument("--quad-points", type=int)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out")
    common.add_argument("--precision", type=int, default=12)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="cvgain", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("fidelity", parents=[common], help="fidelity at one (q, g)").set_defaults(func=cmd_fidelity)
    sub.add_parser("curve", parents=[common], help="fidelity vs gain").set_defaults(func=cmd_curve)
    p = sub.add_parser("optimal-gain", parents=[common], help="fidelity-maximizing gain")
    p.add_argument("--family", choices=["coherent", "qubit"], required=True)
    p.add_argument("--alpha-sq-grid", type=parse_grid)
    p.set_defaults(func=cmd_optimal_gain)
    p = sub.add_parser("figure", parents=[common], help="data behind a published figure")
    p.add_argument("id", choices=FIGURES)
    p.set_defaults(func=cmd_figure)
    p = sub.add_parser("verify", parents=[common], help="run self-consistency suites")
    p.add_argument("--suite", choices=["oracle", "gradient", "normalization", "polarization", "all"], default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.steps < 2:
        parser.error("--steps must be at least 2")
    try:
        return args.func(args)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"cvgain: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
