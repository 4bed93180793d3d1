"""Command line front end: ``mdzv <command> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors (bad arguments, unparsable terms, unknown identities).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import formulas
from .errors import MDZVError, UnknownIdentity
from .evaluate import DEFAULT_TOL, SUMMATION_POLICIES, EvalContext, eval_term, verify
from .printed import parse_merges, printed_for, reference_diff
from .terms import RefinedTerm
from .words import shuffle_product


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.add_argument("--precision", choices=("double", "extended"), default="double")
    p.add_argument("--dps", type=int, default=50, help="digits for extended precision (>= 50)")
    p.add_argument("--summation", choices=SUMMATION_POLICIES, default="compensated")
    p.add_argument("--include-boundary", action="store_true",
                   help="also sum over the ray Re=0, Im>0")
    p.add_argument("--threads", type=int, default=1)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="mdzv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("selfie", parents=[common], help="self-shuffle of zeta_K(n)")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--raw", action="store_true", help="skip symmetry simplification")

    p = sub.add_parser("selfie-mdzv", parents=[common], help="self-shuffle of a two-variable MDZV")
    p.add_argument("--variant", choices=sorted(formulas.MDZV_VARIANTS), required=True)
    p.add_argument("--raw", action="store_true")

    p = sub.add_parser("shuffle", parents=[common], help="product of two refined terms")
    p.add_argument("--left", required=True, help='e.g. "(1):2,2"')
    p.add_argument("--right", required=True)
    p.add_argument("--raw", action="store_true")

    p = sub.add_parser("product", parents=[common], help="zeta_K(n1) zeta_K(n2)")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--raw", action="store_true")

    p = sub.add_parser("eval", parents=[common], help="truncated value of one refined term")
    p.add_argument("--term", required=True, help='e.g. "(1):1,3" or "(23):1,2,1,4"')
    p.add_argument("--field", type=int, default=-1, help="squarefree d < 0")
    p.add_argument("--radius", type=float, required=True)

    p = sub.add_parser("verify", parents=[common], help="compare both sides of an identity")
    p.add_argument("--identity", required=True, help="a name from `mdzv list`, or 'all'")
    p.add_argument("--field", type=int, default=-1)
    p.add_argument("--radius", type=float, default=5.0)
    p.add_argument("--tol", type=float, default=None)

    p = sub.add_parser("diff", parents=[common], help="compare with the transcribed formulas")
    p.add_argument("--identity", required=True)
    p.add_argument("--merge", action="append", default=[], metavar="SRC=DST",
                   help='identify two classes before comparing, e.g. "(234)=(23)"')

    sub.add_parser("list", parents=[common], help="list identity names")
    return parser


def _context(args, field: int, radius: float) -> EvalContext:
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    try:
        return EvalContext.build(field, radius, args.include_boundary, summation=args.summation,
                                 precision=args.precision, dps=args.dps, threads=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _term(text: str) -> RefinedTerm:
    try:
        return RefinedTerm.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad term {text!r}: {exc}") from None


def _fmt_value(z) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.17g}" if z.real else "0"
    return f"{z.real:.17g}{z.imag:+.17g}j"


def _emit_comb(comb, args, out) -> int:
    print(formulas.render(comb, args.format), file=out)
    return 0


def _cmd_eval(args, out) -> int:
    term = _term(args.term)
    if term.k % 2:
        raise UsageError("terms need an even number of generators")
    ctx = _context(args, args.field, args.radius)
    value = complex(eval_term(term, ctx))
    if args.format == "json":
        print(json.dumps({"term": str(term), "field": args.field, "radius": args.radius,
                          "points": len(ctx.truncation), "value": [value.real, value.imag]},
                         separators=(",", ":")), file=out)
    else:
        print(_fmt_value(value), file=out)
    return 0


def _cmd_verify(args, out) -> int:
    names = formulas.identity_names() if args.identity == "all" else [args.identity]
    ctx = _context(args, args.field, args.radius)
    tol = args.tol if args.tol is not None else DEFAULT_TOL[args.precision]
    ok = True
    reports = []
    for name in names:
        rep = verify(name, ctx, tol)
        ok &= rep.passed
        reports.append(rep)
    if args.format == "json":
        docs = [{"identity": r.name, "field": r.field, "radius": r.radius,
                 "lhs": [r.lhs.real, r.lhs.imag], "rhs": [r.rhs.real, r.rhs.imag],
                 "abs_err": r.abs_err, "rel_err": r.rel_err, "tol": r.tol,
                 "terms": r.term_count, "passed": r.passed} for r in reports]
        print(json.dumps(docs if len(docs) > 1 else docs[0], separators=(",", ":")), file=out)
    else:
        print("\n\n".join(str(r) for r in reports), file=out)
    return 0 if ok else 1


def _cmd_diff(args, out) -> int:
    entries = printed_for(args.identity)
    if not entries:
        raise UsageError(f"no transcribed formula for {args.identity!r}")
    try:
        merges = parse_merges(args.merge)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ident = formulas.get_identity(args.identity)
    total = 0
    for entry in entries:
        computed = ident.rhs if entry.simplified else _raw_rhs(args.identity)
        rep = reference_diff(args.identity, computed, entry, merges)
        total += rep.count()
        print("\n".join(rep.lines()), file=out)
    print(f"total discrepancies: {total}", file=out)
    return 0


def _raw_rhs(name: str):
    if name.startswith("selfie-zeta"):
        return formulas.self_shuffle_zeta(int(name[len("selfie-zeta"):]), simplify=False)
    if name == "selfie-mdzv-11":
        return formulas.self_shuffle_mdzv("(1)(1)", simplify=False)
    if name == "selfie-mdzv-121":
        return formulas.self_shuffle_mdzv("(12)(1)", simplify=False)
    if name.startswith("pair-"):
        _, a, _, b = name.split("-")
        return formulas.pair_product(a, b, simplify=False)
    raise UsageError(f"no unsimplified form for {name!r}")


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "selfie":
            if args.weight < 1:
                raise UsageError("--weight must be positive")
            return _emit_comb(formulas.self_shuffle_zeta(args.weight, not args.raw), args, out)
        if args.command == "selfie-mdzv":
            return _emit_comb(formulas.self_shuffle_mdzv(args.variant, not args.raw), args, out)
        if args.command == "shuffle":
            left, right = _term(args.left), _term(args.right)
            if left.k % 2 or right.k % 2:
                raise UsageError("terms need an even number of generators")
            return _emit_comb(shuffle_product(left, right, simplify=not args.raw), args, out)
        if args.command == "product":
            if args.n1 < 1 or args.n2 < 1:
                raise UsageError("--n1 and --n2 must be positive")
            return _emit_comb(formulas.product_zeta(args.n1, args.n2, not args.raw), args, out)
        if args.command == "eval":
            return _cmd_eval(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "diff":
            return _cmd_diff(args, out)
        if args.command == "list":
            print("\n".join(formulas.identity_names()), file=out)
            return 0
    except (UsageError, UnknownIdentity, MDZVError, ValueError) as exc:
        print(f"mdzv {args.command}: error: {exc}", file=sys.stderr)
        return 2
    parser.error(f"unknown command {args.command}")
    return 2


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
