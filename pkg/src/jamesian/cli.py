"""Command line interface.

Exit codes: 0 success, 1 validation or usage error, 2 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from . import functions as jf
from . import loops
from .homeo import parse_homeo
from .matchup import StandingsError, matchup_matrix, read_standings, write_matrix_csv
from .regions import ExplicitRegionSpec, region_grid, write_region_csv
from .salzmann import salzmann_loop

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2

KINDS = ("adams", "representable", "salzmann-transfer")
DEFAULT_F = {"representable": "logit", "salzmann-transfer": "piecewise:0.1"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class FunctionSpec:
    kind: str
    f: str = None
    tolerance: float = None

    def build(self) -> jf.JamesianFunction:
        if self.kind not in KINDS:
            raise UsageError(f"unknown kind {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.kind == "adams":
            if self.f is not None:
                raise UsageError("--f does not apply to --kind adams")
            J = jf.adams_function()
        else:
            try:
                f = parse_homeo(self.f or DEFAULT_F[self.kind])
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            if self.kind == "representable":
                J = jf.from_representable(f)
            else:
                J = jf.from_loop_transfer(salzmann_loop(), f)
        if self.tolerance is not None:
            J = jf.JamesianFunction(J.evaluator, J.construction, J.params, self.tolerance)
        return J


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _spec(args) -> FunctionSpec:
    return FunctionSpec(args.kind, args.f, args.tolerance)


def cmd_eval(args, out) -> int:
    J = _spec(args).build()
    out.write(_fmt(jf.eval_extended(J, args.a, args.b)) + "\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    J = _spec(args).build()
    grid = jf.lattice(args.grid)
    reports = jf.check_axioms(J, grid)
    for r in reports:
        r.seed = args.seed
    pinned = [jf.PINNED_TRIPLE] + [(a, b, 0.5) for a, b in ((0.3, 0.8), (0.9, 0.2))]
    defect = jf.transitivity_defect(J, args.samples, args.seed, pinned=pinned)
    ok = all(r.passed for r in reports)
    doc = {
        "function": J.label,
        "grid": args.grid,
        "seed": args.seed,
        "checks": [r.to_dict() for r in reports],
        "transitivity": defect.to_dict(),
        "passed": ok,
    }
    out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if ok else EXIT_USAGE


def cmd_witness(args, out) -> int:
    if not args.threshold > 0:
        raise UsageError("--threshold must be positive")
    J = _spec(args).build()
    if args.level == "loop":
        found = loops.find_associativity_witness(
            jf.induced_loop(J), args.threshold, args.budget, args.seed
        )
        w = None
        if found is not None:
            w = {
                "triple": list(found.triple),
                "lhs": found.lhs,
                "rhs": found.rhs,
                "defect": found.defect,
                "seed": args.seed,
            }
    else:
        w = jf.find_transitivity_witness(J, args.threshold, args.budget, args.seed)
    if w is None:
        out.write("none\n")
    else:
        out.write(json.dumps(w, indent=2) + "\n")
    return EXIT_OK


def cmd_grid(args, out) -> int:
    J = _spec(args).build()
    pts = jf.lattice(args.resolution)
    with open(args.output, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["a", "b", "J"])
        for a in pts:
            for b in pts:
                w.writerow([_fmt(a), _fmt(b), _fmt(J(a, b))])
    return EXIT_OK


def cmd_regions(args, out) -> int:
    try:
        spec = ExplicitRegionSpec(args.eps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.resolution < 2:
        raise UsageError("--resolution must be at least 2")
    write_region_csv(region_grid(spec, args.resolution), args.output)
    return EXIT_OK


def cmd_predict(args, out) -> int:
    J = _spec(args).build()
    table = read_standings(args.standings)
    matrix = matchup_matrix(J, table)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            write_matrix_csv(table, matrix, fh)
    else:
        write_matrix_csv(table, matrix, out)
    return EXIT_OK


def _add_function_args(p):
    p.add_argument("--kind", choices=KINDS, default="adams")
    p.add_argument("--f", default=None, help="logit | scaled-logit:K | piecewise:EPS")
    p.add_argument("--tolerance", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jamesian", description="Involutive Jamesian functions and their loops.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate J(a, b) on the closed square minus the corners")
    _add_function_args(p)
    p.add_argument("a", type=float)
    p.add_argument("b", type=float)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="axiom suite and transitivity defect as JSON")
    _add_function_args(p)
    p.add_argument("--grid", type=int, default=99)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=jf.DEFAULT_SEED)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witness", help="search for a transitivity or associativity failure")
    _add_function_args(p)
    p.add_argument("--threshold", type=float, default=0.01)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=jf.DEFAULT_SEED)
    p.add_argument(
        "--level",
        choices=("function", "loop"),
        default="function",
        help="transitivity of J, or associativity of its induced loop",
    )
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("grid", help="write a,b,J on the interior lattice")
    _add_function_args(p)
    p.add_argument("--resolution", type=int, default=99)
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("regions", help="write the A1/A2/A3 label grid")
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--resolution", type=int, default=99)
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("predict", help="pairwise matchup matrix from a team,pct CSV")
    _add_function_args(p)
    p.add_argument("standings")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_predict)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, StandingsError, jf.ConstructionError, loops.DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (loops.NumericError, ArithmeticError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
