"""Command-line front end: ``hadamard-walk <command> ...``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis
from .config import DEFAULT, load_config
from .errors import WalkError
from .exact import StepOrder, evolve, state_to_csv, state_to_json
from .saddle import contour_family, contour_to_csv

CONVENTIONS = {"flip": StepOrder.FLIP_THEN_MOVE, "move": StepOrder.MOVE_THEN_FLIP}


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(s) for s in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}")
    return lo, hi


def cmd_evolve(args, cfg):
    state = evolve(args.t, CONVENTIONS[args.convention], budget=cfg.max_exact_t)
    _emit(state_to_csv(state) if args.format == "csv" else state_to_json(state) + "\n", args.out)


def cmd_amplitude(args, cfg):
    left, right = analysis.evaluate(args.method, args.n, args.t, cfg)
    print("n,t,method,psi_L,psi_R")
    print(f"{args.n},{args.t},{args.method},{left:.17g},{right:.17g}")


def cmd_compare(args, cfg):
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    table = analysis.compare(args.t, methods, args.range, strict=args.strict, config=cfg)
    text = analysis.comparison_to_csv(table) if args.format == "csv" else analysis.comparison_to_json(table) + "\n"
    _emit(text, args.out)


def cmd_moments(args, cfg):
    value = analysis.moment_exact(args.t, args.order)
    print(f"{float(value):.17g}")
    if args.exact:
        print(value)


def cmd_contour(args, cfg):
    curves = contour_family(args.alpha, ascent=args.ascent, config=cfg)
    _emit(contour_to_csv(curves), args.out)


def cmd_density(args, cfg):
    print(f"{analysis.limiting_density(args.alpha):.17g}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hadamard-walk", description="Hadamard walk amplitudes, exact and asymptotic.")
    p.add_argument("--config", help="key=value file overriding tolerances and budgets")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("evolve", help="exact state at step T")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--convention", choices=sorted(CONVENTIONS), default="flip")
    s.add_argument("--out")
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_evolve)

    s = sub.add_parser("amplitude", help="(psi_L, psi_R) at one site")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--method", choices=["exact", *analysis.METHODS], default="exact")
    s.set_defaults(func=cmd_amplitude)

    s = sub.add_parser("compare", help="method-vs-exact error table")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--methods", default="auto")
    s.add_argument("--range", type=_range)
    s.add_argument("--strict", action="store_true", help="fail when a method is outside its regime")
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.add_argument("--out")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("moments", help="E[(n/t)^K] under the exact distribution")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--order", type=int, default=1)
    s.add_argument("--exact", action="store_true", help="also print the rational value")
    s.set_defaults(func=cmd_moments)

    s = sub.add_parser("contour", help="steepest descent/ascent curves as CSV")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--out")
    s.add_argument("--ascent", action=argparse.BooleanOptionalAction, default=True)
    s.set_defaults(func=cmd_contour)

    s = sub.add_parser("density", help="limiting density of n/t")
    s.add_argument("--alpha", type=float, required=True)
    s.set_defaults(func=cmd_density)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config) if args.config else DEFAULT
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        args.func(args, cfg)
    except WalkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
