"""Command-line interface.

Exit codes: 0 success, 1 negative answer (not a member, certificate
rejected), 2 usage or parse error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Mapping, Sequence

from .cyclotomic import factor_cyclotomic
from .habiro_ideals import (
    BezoutCertificate,
    InternalInconsistency,
    principality_certificate,
    t_exponent,
    verify_certificate,
)
from .link_ideals import (
    ColorSpec,
    InvalidSpec,
    LinkClass,
    deficits,
    generator_exponents,
    membership,
)
from .poly_core import LaurentPoly, PolySyntaxError, parse, to_string
from .qcalc import expand
from .sweeps import run_suites

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

CLASSES = [c.value for c in LinkClass]


class UsageError(Exception):
    pass


def format_factored(exponents: Mapping[int, int]) -> str:
    """``Phi(1)^2 * Phi(3)^1``; the empty product prints as ``1``."""
    if not exponents:
        return "1"
    return " * ".join(f"Phi({m})^{e}" for m, e in sorted(exponents.items()))


def _spec(cls: str, colors: Sequence[int]) -> ColorSpec:
    try:
        return ColorSpec(LinkClass(cls), tuple(colors))
    except (InvalidSpec, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _parse_poly(text: str) -> LaurentPoly:
    try:
        return parse(text)
    except PolySyntaxError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, text: str, doc: dict) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def cmd_gen(args) -> int:
    spec = _spec(args.link_class, args.colors)
    exps = generator_exponents(spec)
    poly = expand(exps)
    text = to_string(poly) if args.expand else format_factored(exps)
    doc = {
        "class": spec.link_class.value,
        "colors": list(spec.colors),
        "exponents": {str(m): e for m, e in exps.items()},
        "generator": to_string(poly),
    }
    _emit(args, text, doc)
    return EXIT_OK


def cmd_factor(args) -> int:
    p = _parse_poly(args.poly)
    if p.is_zero():
        raise UsageError("cannot factor the zero polynomial")
    fac = factor_cyclotomic(p)
    parts = []
    unit = LaurentPoly.monomial(fac.q_power, fac.sign)
    if not unit.is_one():
        parts.append(to_string(unit))
    if fac.exponents:
        parts.append(format_factored(fac.exponents))
    if not fac.residual.is_one():
        parts.append(f"({to_string(fac.residual)})")
    doc = {
        "sign": fac.sign,
        "q_power": fac.q_power,
        "exponents": {str(m): e for m, e in fac.exponents.items()},
        "residual": to_string(fac.residual),
    }
    _emit(args, " * ".join(parts) or "1", doc)
    return EXIT_OK


def cmd_member(args) -> int:
    p = _parse_poly(args.poly)
    spec = _spec(args.link_class, args.colors)
    result = membership(p, spec)
    if result.member:
        _emit(args, f"member\ncofactor: {to_string(result.cofactor)}",
              {"member": True, "cofactor": to_string(result.cofactor)})
        return EXIT_OK
    missing = deficits(p, spec)
    lines = ["not a member"]
    for m, (need, have) in missing.items():
        lines.append(f"Phi({m}): required {need}, present {have}, deficit {need - have}")
    doc = {
        "member": False,
        "deficits": {str(m): {"required": need, "present": have, "deficit": need - have}
                     for m, (need, have) in missing.items()},
    }
    _emit(args, "\n".join(lines), doc)
    return EXIT_NEGATIVE


def cmd_witness(args) -> int:
    if args.l < 0:
        raise UsageError(f"level must be >= 0, got {args.l}")
    cert = principality_certificate(args.l)
    document = cert.to_json()
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(document + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
        _emit(args, to_string(cert.claimed_generator),
              {"l": cert.l, "generator": to_string(cert.claimed_generator), "path": args.out})
    else:
        print(document)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.path) as fh:
            cert = BezoutCertificate.from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from None
    ok = verify_certificate(cert)
    _emit(args, "valid" if ok else "invalid", {"l": cert.l, "valid": ok})
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_check(args) -> int:
    if args.l_max < 0:
        raise UsageError("--l-max must be >= 0")
    results = run_suites(
        args.l_max,
        certificates=args.certificates,
        rational_max=args.rational_max,
        jobs=args.jobs,
    )
    if args.json:
        print(json.dumps([
            {"suite": r.name, "ok": r.ok, "cases": r.cases, "failures": r.failures}
            for r in results
        ], sort_keys=True))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.ok for r in results) else EXIT_INTERNAL


def cmd_table(args) -> int:
    if args.l_max < 0 or args.m_max < 0:
        raise UsageError("table bounds must be >= 0")
    ls = range(args.l_max + 1)
    rows = {m: [t_exponent(l, m) for l in ls] for m in range(1, args.m_max + 1)}
    if args.json:
        print(json.dumps({"l": list(ls), "rows": {str(m): r for m, r in rows.items()}}))
        return EXIT_OK
    width = max(3, len(str(args.l_max)) + 1, len(str(args.m_max)) + 1)
    print("m\\l".ljust(width) + "".join(str(l).rjust(width) for l in ls))
    for m, row in rows.items():
        print(str(m).ljust(width) + "".join(str(v).rjust(width) for v in row))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    def add_global_flags(p, defaults: bool) -> None:
        # accepted before or after the subcommand; SUPPRESS keeps the
        # subcommand copy from overwriting a flag given up front
        extra = {} if defaults else {"default": argparse.SUPPRESS}
        p.add_argument("--expand", action="store_true", help="print expanded polynomials", **extra)
        p.add_argument("--json", action="store_true", help="machine-readable output", **extra)
        p.add_argument("--jobs", type=int, metavar="N", help="worker processes",
                       **(extra or {"default": 1}))

    common = argparse.ArgumentParser(add_help=False)
    add_global_flags(common, defaults=False)

    parser = argparse.ArgumentParser(
        prog="cycloideal",
        description="Cyclotomic generators of the ideals I_l and of the link-class ideals.",
    )
    add_global_flags(parser, defaults=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generator of a link-class ideal")
    p.add_argument("link_class", choices=CLASSES)
    p.add_argument("colors", type=int, nargs="+")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("factor", parents=[common], help="cyclotomic factorization")
    p.add_argument("poly")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("member", parents=[common], help="ideal membership")
    p.add_argument("poly")
    p.add_argument("link_class", choices=CLASSES)
    p.add_argument("colors", type=int, nargs="+")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("witness", parents=[common], help="principality certificate for I_l")
    p.add_argument("l", type=int)
    p.add_argument("-o", "--out", help="write the certificate document here")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="check a certificate document")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", parents=[common], help="run the verification sweeps")
    p.add_argument("--l-max", type=int, default=16)
    p.add_argument("--certificates", action="store_true", help="include certificate construction")
    p.add_argument("--rational-max", type=int, default=12, help="bound for the rational GCD oracle")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table", parents=[common], help="print t_{l,m}")
    p.add_argument("l_max", type=int, nargs="?", default=16)
    p.add_argument("m_max", type=int, nargs="?", default=4)
    p.set_defaults(func=cmd_table)
    return parser


def _protect_polynomials(argv: Sequence[str]) -> list[str]:
    # "-q^2+1" would otherwise be read as an option; leading blanks are legal input
    out = []
    for arg in argv:
        if arg.startswith("-") and not arg.startswith("--") and any(ch in arg for ch in "q(*^+"):
            arg = " " + arg
        out.append(arg)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_protect_polynomials(argv))
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return exc.code
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
