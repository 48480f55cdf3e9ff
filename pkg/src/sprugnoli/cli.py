"""Command-line front end.

    sprugnoli build --family sprugnoli --g "1/(1-x)" --f1 "x*(1+x)/(1-x)" --f2 "x/(1-x^2)"
    sprugnoli apply ... --seq "1/(1-x-x^2)"
    sprugnoli mul ... --other-g ... --other-f1 ...
    sprugnoli inv ...
    sprugnoli production ...
    sprugnoli verify [pattern] [--list]

Exit codes: 0 success, 1 bad input (parse errors, missing slots, precision),
2 group-membership violation, 3 an internal oracle disagrees or a fixture fails.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import families, fixtures
from .errors import GroupMembershipError, SeriesError
from .expr import ExprSyntaxError, UnknownIdentifierError, series
from .matrix import Matrix
from .production import extract_stripes, production_matrix
from .production import STRIPE_NAMES

EXIT_INPUT, EXIT_MEMBERSHIP, EXIT_ORACLE = 1, 2, 3
SLOT_FLAGS = ("g", "f", "f1", "f2", "f3", "f4", "f5")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # usage errors share exit code 1 with expression parse errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _num(v: Fraction):
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _text(v: Fraction) -> str:
    return str(_num(v))


def format_matrix(mat: Matrix, fmt: str, family: str) -> str:
    rows = mat.to_lists()
    if fmt == "json":
        return json.dumps({"family": family, "dim": mat.dim, "entries": [[_num(v) for v in r] for r in rows]})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in rows:
            w.writerow([_text(v) for v in r])
        return buf.getvalue().rstrip("\n")
    cells = [[_text(v) for v in r] for r in rows]
    width = max(len(c) for r in cells for c in r)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def format_sequence(terms: Sequence[Fraction], fmt: str, family: str) -> str:
    if fmt == "json":
        return json.dumps({"family": family, "dim": len(terms), "terms": [_num(v) for v in terms]})
    return ",".join(_text(v) for v in terms)


def _slots(args, prefix: str = "") -> dict:
    out = {}
    for name in SLOT_FLAGS:
        val = getattr(args, prefix + name, None)
        if val is not None:
            out[name] = val
    return out


def _element(args, prefix: str = ""):
    slots = _slots(args, prefix)
    needed = families.slot_names(args.family, slots)
    missing = [n for n in needed if n not in slots]
    if missing or (args.family == "general" and len(needed) < 3):
        flags = ", ".join("--" + prefix.replace("_", "-") + n for n in missing) or "--f1 and --f2"
        raise CliError(f"family {args.family} needs {flags}", EXIT_INPUT)
    return families.make_element(args.family, slots, args.order)


def _components_text(elem, order: int) -> list[str]:
    return [f"{k} = {v.truncate(min(order, v.order))}" for k, v in families.components(elem).items()]


def cmd_build(args) -> str:
    elem = _element(args)
    return format_matrix(families.build(elem, args.dim), args.format, args.family)


def cmd_apply(args) -> str:
    if not args.seq:
        raise CliError("apply needs --seq", EXIT_INPUT)
    elem = _element(args)
    h = series(args.seq, args.order)
    got = families.apply(elem, h)
    n = min(args.dim, got.order + 1)
    terms = list(got.coeffs[:n])
    if families.build(elem, n).apply(h) != terms:
        raise CliError("series action disagrees with the matrix-vector product", EXIT_ORACLE)
    return format_sequence(terms, args.format, args.family)


def cmd_mul(args) -> str:
    a, b = _element(args), _element(args, "other_")
    n = args.dim
    prod = families.multiply(a, b, n)
    mat = prod if isinstance(prod, Matrix) else families.build(prod, n)
    if mat != families.build(a, n) @ families.build(b, n):
        raise CliError("product element disagrees with the matrix product", EXIT_ORACLE)
    out = format_matrix(mat, args.format, args.family)
    if args.format == "pretty" and not isinstance(prod, Matrix):
        out = "\n".join(_components_text(prod, args.order) + ["", out])
    return out


def cmd_inv(args) -> str:
    elem = _element(args)
    n = args.dim
    inv = families.invert(elem, n)
    mat = inv if isinstance(inv, Matrix) else families.build(inv, n)
    if mat @ families.build(elem, n) != Matrix.identity(n):
        raise CliError("inverse element does not invert the matrix", EXIT_ORACLE)
    out = format_matrix(mat, args.format, args.family)
    if args.format == "pretty" and not isinstance(inv, Matrix):
        out = "\n".join(_components_text(inv, args.order) + ["", out])
    return out


def cmd_production(args) -> str:
    elem = _element(args)
    p = production_matrix(families.build(elem, args.dim + 1))
    out = format_matrix(p, args.format, args.family)
    if args.format == "pretty":
        st = extract_stripes(p, families.period(elem))
        lines = ["Z: " + format_sequence(st.z, "csv", args.family)]
        for name, s in zip(STRIPE_NAMES, st.stripes):
            lines.append(f"{name}: " + format_sequence(s, "csv", args.family))
        out = "\n".join([out, ""] + lines)
    return out


def cmd_verify(args) -> tuple[str, int]:
    chosen = fixtures.select(args.pattern)
    if not chosen:
        return f"no fixture matches {args.pattern!r}", EXIT_INPUT
    lines = []
    if args.list:
        for fx in chosen:
            lines.append(f"{fx.id:<22} {fx.family:<10} {fx.where}")
            for c in fx.checks:
                tag = "derived" if c.derived else "quoted"
                extra = ""
                if c.printed is not None:
                    extra = f" (printed: {c.printed})" if isinstance(c.printed, str) else " (printed value differs)"
                lines.append(f"    {c.kind:<20} {tag}{extra}")
        return "\n".join(lines), 0
    failed = 0
    for fx in chosen:
        results = fixtures.run_fixture(fx)
        ok = all(r.ok for r in results)
        failed += not ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {fx.id}  [{fx.where}]")
        for r in results:
            lines.append(f"    {'ok  ' if r.ok else 'FAIL'} {r.kind}: {r.detail}")
    lines.append(f"{len(chosen) - failed}/{len(chosen)} fixtures passed")
    return "\n".join(lines), EXIT_ORACLE if failed else 0


def _add_element_flags(p: argparse.ArgumentParser, with_other: bool = False) -> None:
    p.add_argument("--family", choices=families.FAMILIES, default="sprugnoli")
    for name in SLOT_FLAGS:
        p.add_argument(f"--{name}", metavar="EXPR")
    if with_other:
        for name in SLOT_FLAGS:
            p.add_argument(f"--other-{name}", dest=f"other_{name}", metavar="EXPR")
    p.add_argument("--order", type=int, default=12, help="truncation order of the series (default 12)")
    p.add_argument("--dim", type=int, default=9, help="matrix dimension (default 9)")
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sprugnoli", description="Riordan, double Riordan and Sprugnoli arrays over Q.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, helptext in (
        ("build", "print the matrix of an element"),
        ("apply", "act on the series given by --seq"),
        ("inv", "invert an element"),
        ("production", "production matrix and its stripes"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_element_flags(p)
        if name == "apply":
            p.add_argument("--seq", metavar="EXPR", help="series to act on")
    _add_element_flags(sub.add_parser("mul", help="multiply two elements of the same family"), with_other=True)
    v = sub.add_parser("verify", help="run the embedded example fixtures")
    v.add_argument("pattern", nargs="?", help="fixture id, prefix or glob")
    v.add_argument("--list", action="store_true", help="list fixtures and the provenance of each check")
    return parser


COMMANDS = {"build": cmd_build, "apply": cmd_apply, "mul": cmd_mul, "inv": cmd_inv, "production": cmd_production}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    if args.command == "verify":
        out, code = cmd_verify(args)
        print(out)
        return code
    for attr in ("dim", "order"):
        if getattr(args, attr) < 1:
            print(f"error: --{attr} must be positive", file=sys.stderr)
            return EXIT_INPUT
    try:
        print(COMMANDS[args.command](args))
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except GroupMembershipError as exc:
        print(f"error: not a group element: {exc}", file=sys.stderr)
        return EXIT_MEMBERSHIP
    except (ExprSyntaxError, UnknownIdentifierError) as exc:
        print(f"error: cannot parse expression: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SeriesError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
