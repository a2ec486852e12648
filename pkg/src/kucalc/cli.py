"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import List, Optional, Sequence

from . import riemann_roch as rr
from .classes import UnknownClass, b0_class, is_b0_name, y_class
from .clifford import CLIFFORD_BASIS, B0Char, IntegralityError
from .ring import format_rat, rat
from .verify import groups, run_verify
from .walls import WallProblem, WallSolution, enumerate_walls_report

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def approx(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 6
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return f"{d:g}~" if d != 0 else "0~"


def show(x: Fraction, decimal: bool) -> str:
    s = format_rat(x)
    if decimal and x.denominator != 1:
        s += f" [{approx(x)}]"
    return s


def show_vec(v: Sequence[Fraction], decimal: bool) -> str:
    return "(" + ", ".join(show(x, decimal) for x in v) + ")"


def dump(obj) -> str:
    return json.dumps(obj, indent=2)


def parse_triple(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected three comma-separated values, got {text!r}")
    try:
        return tuple(rat(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {text!r} as rationals") from None


def cmd_chern(args) -> str:
    name = args.name
    try:
        if is_b0_name(name):
            twist = rat(args.twist)
            c = b0_class(name, twist)
            if args.json:
                return dump({
                    "class": name,
                    "beta": format_rat(twist),
                    "ch": [format_rat(x) for x in c.triple()],
                })
            return show_vec(c.triple(), args.decimal)
        k = y_class(name)
    except UnknownClass as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        return dump({"class": name, "ch": [format_rat(x) for x in k.display()]})
    return show_vec(k.display(), args.decimal)


def cmd_pairing(args) -> str:
    try:
        a, b = y_class(args.class_a), y_class(args.class_b)
    except UnknownClass as exc:
        raise UsageError(str(exc)) from None
    chi = rr.euler_pairing(a, b)
    mukai = rr.mukai_pairing(a, b)
    if args.json:
        return dump({
            "a": args.class_a,
            "b": args.class_b,
            "chi": format_rat(chi),
            "mukai": format_rat(mukai),
        })
    return f"chi = {show(chi, args.decimal)}\nmukai = {show(mukai, args.decimal)}"


def _wall_rows(walls: List[WallSolution], decimal: bool) -> List[str]:
    rows = []
    for w in walls:
        a2 = "-" if w.alpha_sq is None else show(w.alpha_sq, False)
        alpha = w.alpha_approx() or "-"
        rows.append((a2, alpha, *map(str, w.coeffs),
                     show_vec(w.sub.triple(), decimal), show_vec(w.quot.triple(), decimal)))
    head = ("alpha^2", "alpha~", "a", "b", "c", "sub", "quot")
    widths = [max(len(r[i]) for r in rows + [head]) for i in range(len(head))]
    fmt_row = lambda r: "  ".join(x.ljust(wd) for x, wd in zip(r, widths)).rstrip()  # noqa: E731
    return [fmt_row(head)] + [fmt_row(r) for r in rows]


def cmd_walls(args) -> str:
    if (args.target is None) == (args.coords is None):
        raise UsageError("give exactly one of --target or --coords")
    if args.rank_step < 1:
        raise UsageError("--rank-step must be positive")
    if args.target is not None:
        target = B0Char.of(*parse_triple(args.target))
    else:
        coords = parse_triple(args.coords)
        if any(c.denominator != 1 for c in coords):
            raise DomainError(f"lattice coordinates must be integers, got {args.coords}")
        target = CLIFFORD_BASIS.combine(coords)
    try:
        problem = WallProblem(
            target,
            rank_step=args.rank_step,
            strict_subobject_slope=not args.non_strict,
        )
    except IntegralityError as exc:
        coords = ", ".join(format_rat(c) for c in exc.coords)
        raise DomainError(f"IntegralityError: target has lattice coordinates ({coords})") from None
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    report = enumerate_walls_report(problem, jobs=args.jobs)

    if args.json:
        out = {"target": problem.target.to_json(), "walls": [w.to_json() for w in report.walls]}
        if args.non_strict:
            out["boundary"] = [w.to_json() for w in report.boundary]
        return dump(out)

    lines = [f"target {show_vec(problem.target.triple(), args.decimal)} at beta = -1"]
    if report.walls:
        lines += _wall_rows(report.walls, args.decimal)
    else:
        lines.append("no walls")
    if args.non_strict:
        lines.append("boundary splittings (sub proportional to target):")
        if report.boundary:
            lines += _wall_rows(report.boundary, args.decimal)
        else:
            lines.append("none")
    return "\n".join(lines)


def cmd_verify(args):
    if args.only is not None and args.only not in groups():
        raise UsageError(f"unknown group {args.only!r}; choose from {', '.join(groups())}")
    report = run_verify(args.only)
    if args.json:
        text = dump(report.to_json())
    else:
        lines = []
        for c in report.checks:
            expected = c.expected if isinstance(c.expected, str) else " | ".join(c.expected)
            lines.append(f"{c.status:<27} {c.group:<13} {c.name}: {c.computed}")
            if c.status != "pass":
                lines.append(f"{'':<42}expected: {expected}")
        counts = report.counts()
        lines.append(", ".join(f"{k}={v}" for k, v in counts.items()))
        text = "\n".join(lines)
    return text, (EXIT_OK if report.ok else 1)


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # registered on both the main parser and every subparser, so the flags
    # work before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--decimal", action="store_true", default=d(False),
                   help="append 6-significant-digit approximations marked '~'")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes for wall enumeration")
    return p


def build_parser() -> argparse.ArgumentParser:
    sub_flags = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(
        prog="kucalc",
        description="Exact invariants of the Kuznetsov component of a cubic fourfold.",
        parents=[_global_flags(suppress=False)],
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("chern", parents=[sub_flags], help="print a Chern character")
    p.add_argument("name", help="lambda1, 2l1+2l2, p_ell, e_gamma, e_c, i_gamma, O(k), B<j>, psi:<expr>")
    p.add_argument("--twist", default="-1", help="beta for B<j> and psi:<expr> (default -1)")
    p.set_defaults(func=cmd_chern)

    p = subs.add_parser("pairing", parents=[sub_flags], help="Euler and Mukai pairing of two classes")
    p.add_argument("class_a")
    p.add_argument("class_b")
    p.set_defaults(func=cmd_pairing)

    p = subs.add_parser("walls", parents=[sub_flags], help="enumerate numerical walls at beta = -1")
    p.add_argument("--target", help="rk,c1,c2 at beta = -1")
    p.add_argument("--coords", help="x,y,z in the lattice basis (4,1,1/8), (0,2,0), (0,0,1)")
    p.add_argument("--non-strict", action="store_true",
                   help="also report splittings on the boundary of the destabilizing condition")
    p.add_argument("--rank-step", type=int, default=4)
    p.set_defaults(func=cmd_walls)

    p = subs.add_parser("verify", parents=[sub_flags], help="run the regression checks")
    p.add_argument("--only", help="restrict to one group")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.jobs < 1:
        print("kucalc: error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"kucalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"kucalc: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
