"""Command-line entry point.

Subcommands: hull (compute a hull from a point file), mc (the randomized
chain experiment), inject (deterministic worst-order bound checks),
forward-error (float vs exact hulls over generated corpora), and
conditioning (perturbation stability of the exact hull).  Every asserted
bound doubles as an exit code: violations exit 1, usage and parse errors
exit 2, success exits 0.  Identical invocations produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .experiments import (
    DEFAULT_K_VALUES,
    DESK_N_VALUES,
    PAPER_N_VALUES,
    BoundViolation,
    McConfig,
    forward_error_experiment,
    injection_experiment,
    monte_carlo_experiment,
)
from .generators import GeneratorKind, GeneratorSpec, generate
from .geometry import Point
from .metrics import conditioning_check
from .quickhull import PredicateMode, quickhull
from .reduction import Blocked, Pairwise, ReductionStrategy, Sequential


class CliError(Exception):
    """Input that cannot be processed; maps to exit code 2."""


def _parse_float(text: str, where: str) -> float:
    s = text.strip()
    try:
        if s.lower().lstrip("+-").startswith("0x"):
            return float.fromhex(s)
        return float(s)
    except ValueError:
        raise CliError(f"{where}: not a number: {text!r}") from None


def _read_points(path: str) -> list[Point]:
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    points = []
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split(",")
        if len(parts) != 2:
            raise CliError(f"{path}, line {lineno}: expected 'x,y', got {raw.rstrip()!r}")
        where = f"{path}, line {lineno}"
        x = _parse_float(parts[0], where)
        y = _parse_float(parts[1], where)
        try:
            points.append(Point(x, y))
        except ValueError as exc:
            raise CliError(f"{where}: {exc}") from None
    if not points:
        raise CliError(f"{path}: no points")
    return points


def _strategy(args: argparse.Namespace) -> ReductionStrategy:
    if args.strategy == "sequential":
        return Sequential()
    if args.strategy == "blocked":
        return Blocked(args.m)
    if args.strategy == "pairwise":
        return Pairwise()
    raise CliError(f"unknown strategy {args.strategy!r}")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _fmt_coord(v: float, bitexact: bool) -> str:
    return v.hex() if bitexact else repr(v)


def _cmd_hull(args: argparse.Namespace) -> int:
    points = _read_points(args.input)
    mode = PredicateMode.EXACT if args.mode == "exact" else PredicateMode.FLOAT
    hull = quickhull(points, mode, _strategy(args), audit=args.audit)
    lines = [
        f"{_fmt_coord(v.x, args.bitexact)},{_fmt_coord(v.y, args.bitexact)}"
        for v in hull.vertices
    ]
    _write(args.output, "\n".join(lines) + "\n")
    stats = f"vertices={len(hull.vertices)} depth={hull.depth} comparisons={hull.comparisons}"
    if args.audit:
        stats += (
            f" misclassifications={hull.misclassifications}"
            f" farther_disagreements={hull.farther_disagreements}"
        )
    print(stats, file=sys.stderr)
    return 0


def _cmd_mc(args: argparse.Namespace) -> int:
    n_values = tuple(args.n_values) if args.n_values else (
        PAPER_N_VALUES if args.paper_grid else DESK_N_VALUES
    )
    k_values = tuple(args.k_values) if args.k_values else DEFAULT_K_VALUES
    cfg = McConfig(
        n_values=n_values,
        k_values=k_values,
        samples=args.samples,
        repeats=args.repeats,
        seed=args.seed,
    )
    records = monte_carlo_experiment(cfg)
    rows = ["n,k,mean,stddev"]
    rows += [f"{r.n},{r.k},{r.mean:.6f},{r.stddev:.6f}" for r in records]
    _write(args.output, "\n".join(rows) + "\n")
    return 0


def _cmd_inject(args: argparse.Namespace) -> int:
    strategy = _strategy(args)
    rows = ["strategy,n,k,m,measured,bound"]
    worst = 0.0
    try:
        for k in args.k_values or [1]:
            measured, bound = injection_experiment(args.n, k, strategy)
            m = args.m if args.strategy == "blocked" else ""
            rows.append(f"{args.strategy},{args.n},{k},{m},{measured:.6f},{bound:.6f}")
            worst = max(worst, measured)
            print(
                f"{args.strategy} n={args.n} k={k}: measured {measured:.6f} "
                f"<= bound {bound:.6f}"
            )
    except BoundViolation as exc:
        print(f"bound violated: {exc}", file=sys.stderr)
        json.dump(
            {"command": "inject", "strategy": args.strategy, "n": args.n,
             "k_values": list(args.k_values or [1]), "m": args.m},
            sys.stderr,
        )
        print(file=sys.stderr)
        return 1
    if args.output:
        _write(args.output, "\n".join(rows) + "\n")
    return 0


_CORPUS_KINDS = (
    GeneratorKind.UNIFORM_DISK,
    GeneratorKind.UNIFORM_CIRCLE,
    GeneratorKind.GAUSSIAN,
    GeneratorKind.COLLINEAR,
    GeneratorKind.WITH_DUPLICATES,
    GeneratorKind.LADDER,
    GeneratorKind.GRID,
)


def _corpus_specs(args: argparse.Namespace) -> list[GeneratorSpec]:
    if args.generator:
        kind = GeneratorKind(args.generator)
        return [GeneratorSpec(kind, args.n, args.seed, args.k)]
    specs = []
    for kind in _CORPUS_KINDS:
        for i in range(args.trials):
            n = args.n if kind is not GeneratorKind.LADDER else args.n + args.n % 2
            specs.append(GeneratorSpec(kind, n, args.seed + i, args.k))
    return specs


def _cmd_forward_error(args: argparse.Namespace) -> int:
    strategy = _strategy(args)
    rows = ["generator,n,seed,d_m,bound,depth,practical"]
    violation = None
    for spec in _corpus_specs(args):
        report, practical = forward_error_experiment(spec, strategy)
        rows.append(
            f"{spec.kind.value},{spec.n},{spec.seed},{report.d_m:.17e},"
            f"{report.bound:.17e},{report.depth},{int(practical)}"
        )
        if report.d_m > report.bound and violation is None:
            violation = spec
    _write(args.output, "\n".join(rows) + "\n")
    if violation is not None:
        print("forward-error bound violated", file=sys.stderr)
        json.dump(
            {"command": "forward-error", "generator": violation.kind.value,
             "n": violation.n, "seed": violation.seed, "k": violation.k,
             "strategy": args.strategy, "m": args.m},
            sys.stderr,
        )
        print(file=sys.stderr)
        return 1
    print(f"forward error within bounds on {len(rows) - 1} instances")
    return 0


def _cmd_conditioning(args: argparse.Namespace) -> int:
    rows = ["generator,n,seed,delta,ok"]
    failed = None
    for kind in _CORPUS_KINDS:
        for i in range(args.instances):
            n = args.n + args.n % 2 if kind is GeneratorKind.LADDER else args.n
            spec = GeneratorSpec(kind, n, args.seed + i)
            points = generate(spec)
            for delta in args.delta:
                ok = conditioning_check(points, delta, args.trials, args.seed + i)
                rows.append(f"{kind.value},{n},{spec.seed},{delta:.0e},{int(ok)}")
                if not ok and failed is None:
                    failed = (spec, delta)
    _write(args.output, "\n".join(rows) + "\n")
    if failed is not None:
        spec, delta = failed
        print("conditioning violated", file=sys.stderr)
        json.dump(
            {"command": "conditioning", "generator": spec.kind.value,
             "n": spec.n, "seed": spec.seed, "delta": delta},
            sys.stderr,
        )
        print(file=sys.stderr)
        return 1
    print(f"conditioning holds on {len(rows) - 1} checks")
    return 0


def _add_strategy_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--strategy",
        choices=("sequential", "blocked", "pairwise"),
        default="sequential",
        help="farthest-point reduction order (default: sequential)",
    )
    p.add_argument(
        "--m",
        type=int,
        default=None,
        help="block size for --strategy blocked (default: ceil(sqrt(n)))",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hullstab",
        description="Planar Quickhull and its numerical-stability experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hull = sub.add_parser("hull", help="convex hull of a point CSV file")
    p_hull.add_argument("input", help="CSV file with one 'x,y' pair per line")
    p_hull.add_argument("--mode", choices=("float", "exact"), default="float")
    _add_strategy_args(p_hull)
    p_hull.add_argument("--audit", action="store_true",
                        help="also count float/exact predicate disagreements")
    p_hull.add_argument("--bitexact", action="store_true",
                        help="emit hex float literals for lossless round-trips")
    p_hull.add_argument("-o", "--output", default=None)
    p_hull.set_defaults(fn=_cmd_hull)

    p_mc = sub.add_parser("mc", help="randomized chain experiment (CSV n,k,mean,stddev)")
    p_mc.add_argument("--n-values", type=int, nargs="+", default=None)
    p_mc.add_argument("--k-values", type=int, nargs="+", default=None)
    p_mc.add_argument("--samples", type=int, default=300)
    p_mc.add_argument("--repeats", type=int, default=10)
    p_mc.add_argument("--seed", type=int, default=0)
    p_mc.add_argument("--paper-grid", action="store_true",
                      help="extend n to 2**20 (slow)")
    p_mc.add_argument("-o", "--output", default=None)
    p_mc.set_defaults(fn=_cmd_mc)

    p_inj = sub.add_parser("inject", help="worst-order reduction error vs budget")
    p_inj.add_argument("--n", type=int, default=1024)
    p_inj.add_argument("--k-values", type=int, nargs="+", default=[1])
    _add_strategy_args(p_inj)
    p_inj.add_argument("-o", "--output", default=None)
    p_inj.set_defaults(fn=_cmd_inject)

    p_fwd = sub.add_parser("forward-error", help="float vs exact hull error vs budget")
    p_fwd.add_argument("--generator", choices=[k.value for k in GeneratorKind],
                       default=None, help="run one generator instead of the corpus")
    p_fwd.add_argument("--n", type=int, default=128)
    p_fwd.add_argument("--k", type=int, default=1)
    p_fwd.add_argument("--seed", type=int, default=0)
    p_fwd.add_argument("--trials", type=int, default=20,
                       help="instances per corpus generator")
    _add_strategy_args(p_fwd)
    p_fwd.add_argument("-o", "--output", default="-")
    p_fwd.set_defaults(fn=_cmd_forward_error)

    p_cond = sub.add_parser("conditioning", help="hull stability under perturbation")
    p_cond.add_argument("--delta", type=float, nargs="+",
                        default=[1e-3, 1e-6, 1e-9])
    p_cond.add_argument("--n", type=int, default=32)
    p_cond.add_argument("--instances", type=int, default=10,
                        help="instances per generator")
    p_cond.add_argument("--trials", type=int, default=1,
                        help="perturbations per instance")
    p_cond.add_argument("--seed", type=int, default=0)
    p_cond.add_argument("-o", "--output", default="-")
    p_cond.set_defaults(fn=_cmd_conditioning)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
