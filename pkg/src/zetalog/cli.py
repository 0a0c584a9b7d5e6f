"""Command-line front end.

Subcommands: expand, table, verify, express, survey, partitions.
Formats: text (default), json (single-line envelope), latex where it
makes sense.  Exit codes: 0 success, 1 usage or parse error, 2 target
not expressible, 3 verification failure or precision budget exhausted.

JSON envelopes look like {"schema_version": 1, "command": ...,
"inputs": ..., "result": ..., "elapsed_ms": ...} with rationals as
exact "p/q" strings and high-precision values as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from mpmath import mp, workdps

from .expansion import (
    MonomialParseError,
    PiReducedCombination,
    ZetaCombination,
    ZetaMonomial,
    _exp_str,
    expand_lz,
    expand_weight,
    reduce_even,
)
from .numerics import (
    PrecisionBudgetError,
    evaluate_reduced,
    lz_quadrature,
    lz_series,
    verify_expansion,
)
from .partitions import PARITY_CHOICES, PartitionFilter, enumerate_partitions
from .solver import MODES, Certificate, express, survey

__all__ = ["main", "console_main"]

SCHEMA_VERSION = 1
DEFAULT_MAX_WEIGHT = 24
SURVEY_WEIGHT_CAP = 40
DIGITS_CAP = 60


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; the contract reserves 2 for
    # "not expressible", so usage problems must leave with 1 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="zetalog", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p, *, latex: bool = True):
        choices = ["text", "json"] + (["latex"] if latex else [])
        p.add_argument("--format", choices=choices, default="text")

    def add_cap(p):
        p.add_argument(
            "--max-weight",
            type=int,
            default=None,
            help="override the weight cap (default 24, or ZL_MAX_WEIGHT)",
        )

    p = sub.add_parser("expand", help="expand Lz(a,b) into zeta monomials")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--reduce", action="store_true", help="fold even zetas into pi powers")
    add_format(p)
    add_cap(p)

    p = sub.add_parser("table", help="all expansions of one weight")
    p.add_argument("N", type=int)
    p.add_argument("--reduce", action="store_true")
    add_format(p)
    add_cap(p)

    p = sub.add_parser("verify", help="check an expansion numerically")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--digits", type=int, default=30)
    p.add_argument(
        "--method", choices=["series", "quadrature", "both"], default="both"
    )

    p = sub.add_parser("express", help="certificate for an odd-zeta monomial")
    p.add_argument("monomial", help="e.g. z3, z3^2*z5")
    p.add_argument("--mode", choices=list(MODES), default="optimistic")
    p.add_argument("--weight", type=int, default=None)
    add_format(p)
    add_cap(p)

    p = sub.add_parser("survey", help="equations/unknowns/rank per weight")
    p.add_argument("--from", dest="from_weight", type=int, required=True)
    p.add_argument("--to", dest="to_weight", type=int, required=True)
    p.add_argument("--mode", choices=list(MODES), default="optimistic")
    add_format(p)

    p = sub.add_parser("partitions", help="restricted partition listing")
    p.add_argument("N", type=int)
    p.add_argument("--min-part", dest="min_part", type=int, default=1)
    p.add_argument("--parts", type=int, default=None)
    p.add_argument("--parity", choices=list(PARITY_CHOICES), default="any")
    add_format(p, latex=False)

    return parser


def _weight_cap(args) -> int:
    if getattr(args, "max_weight", None) is not None:
        return args.max_weight
    env = os.environ.get("ZL_MAX_WEIGHT")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise _UsageError(f"ZL_MAX_WEIGHT is not an integer: {env!r}") from exc
    return DEFAULT_MAX_WEIGHT


def _print_envelope(command: str, inputs: dict, result: dict, started: float) -> None:
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "elapsed_ms": int((time.monotonic() - started) * 1000),
    }
    print(json.dumps(envelope))


def _raw_terms_payload(comb: ZetaCombination) -> list[dict]:
    return [
        {"mono": str(mono), "coeff": str(coeff)} for mono, coeff in comb.sorted_terms()
    ]


def _reduced_terms_payload(comb: PiReducedCombination) -> list[dict]:
    return [
        {"mono": str(mono), "coeff": str(s.coeff), "pi": s.pi_exponent}
        for mono, s in comb.sorted_terms()
    ]


def _cmd_expand(args, started: float) -> int:
    if args.a < 1 or args.b < 1:
        raise _UsageError("expand needs a >= 1 and b >= 1")
    cap = _weight_cap(args)
    if args.a + args.b > cap:
        raise _UsageError(f"a+b = {args.a + args.b} exceeds the weight cap {cap}")
    comb = expand_lz(args.a, args.b)
    obj = reduce_even(comb) if args.reduce else comb
    if args.format == "json":
        result = {
            "weight": obj.weight,
            "reduced": args.reduce,
            "terms": _reduced_terms_payload(obj)
            if args.reduce
            else _raw_terms_payload(obj),
        }
        _print_envelope(
            "expand",
            {"a": args.a, "b": args.b, "reduce": args.reduce},
            result,
            started,
        )
    elif args.format == "latex":
        print(f"Lz({args.a},{args.b})={obj.latex()}")
    else:
        print(obj.text())
    return 0


def _cmd_table(args, started: float) -> int:
    cap = _weight_cap(args)
    if not 2 <= args.N <= cap:
        raise _UsageError(f"table needs 2 <= N <= {cap}")
    entries = expand_weight(args.N)
    shown = {
        pair: (reduce_even(comb) if args.reduce else comb)
        for pair, comb in entries.items()
    }
    if args.format == "json":
        result = {
            "weight": args.N,
            "reduced": args.reduce,
            "entries": [
                {
                    "a": a,
                    "b": b,
                    "terms": _reduced_terms_payload(obj)
                    if args.reduce
                    else _raw_terms_payload(obj),
                }
                for (a, b), obj in shown.items()
            ],
        }
        _print_envelope("table", {"N": args.N, "reduce": args.reduce}, result, started)
    elif args.format == "latex":
        for (a, b), obj in shown.items():
            print(f"Lz({a},{b})={obj.latex()}")
    else:
        for (a, b), obj in shown.items():
            print(f"Lz({a},{b}) = {obj.text()}")
    return 0


def _cmd_verify(args, started: float) -> int:
    if args.a < 1 or args.b < 1:
        raise _UsageError("verify needs a >= 1 and b >= 1")
    if not 1 <= args.digits <= DIGITS_CAP:
        raise _UsageError(f"digits must be within 1..{DIGITS_CAP}")
    digits = args.digits

    def show(name, value):
        print(f"{name:>11}: {mp.nstr(value, digits)}")

    if args.method == "both":
        report = verify_expansion(args.a, args.b, digits)
        show("symbolic", report.symbolic)
        show("series", report.series)
        show("quadrature", report.quadrature)
        show("deviation", report.max_deviation)
        show("threshold", report.threshold)
        print("PASS" if report.passed else "FAIL")
        return 0 if report.passed else 3
    with workdps(digits + 10):
        symbolic = evaluate_reduced(reduce_even(expand_lz(args.a, args.b)), digits + 5)
        fn = lz_series if args.method == "series" else lz_quadrature
        value = fn(args.a, args.b, digits + 5)
        deviation = abs(value - symbolic)
        threshold = mp.mpf(10) ** (-(digits - 5))
        passed = bool(deviation < threshold)
    show("symbolic", symbolic)
    show(args.method, value)
    show("deviation", deviation)
    show("threshold", threshold)
    print("PASS" if passed else "FAIL")
    return 0 if passed else 3


def _mag_text(q: Fraction) -> str:
    return str(q) if q.denominator == 1 else f"({q})"


def _mag_latex(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"\\frac{{{q.numerator}}}{{{q.denominator}}}"


def _join_terms(chunks: list[tuple[bool, str]], latex: bool) -> str:
    if not chunks:
        return "0"
    out = []
    for i, (negative, body) in enumerate(chunks):
        if i == 0:
            out.append(("-" + body) if negative else body)
        elif latex:
            out.append(("-" if negative else "+") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def _certificate_line(cert: Certificate, latex: bool) -> str:
    e = cert.target_pi_exponent
    if latex:
        lhs = (f"\\pi{_exp_str(e)}" if e else "") + cert.target.latex()
    else:
        lhs = (f"pi^{e}*" if e else "") + str(cert.target)
    chunks: list[tuple[bool, str]] = []
    for (a, b), s in cert.sorted_lz():
        mag = abs(s.coeff)
        if latex:
            body = ("" if mag == 1 else _mag_latex(mag)) + f"Lz({a},{b})"
        else:
            body = ("" if mag == 1 else _mag_text(mag) + "*") + f"Lz({a},{b})"
        chunks.append((s.coeff < 0, body))
    for mono, s in cert.known_remainder.sorted_terms():
        mag = abs(s.coeff)
        if latex:
            parts = []
            if mag != 1 or (s.pi_exponent == 0 and mono.is_unit):
                parts.append(_mag_latex(mag))
            if s.pi_exponent:
                parts.append("\\pi" + _exp_str(s.pi_exponent))
            if not mono.is_unit:
                parts.append(mono.latex())
            body = "".join(parts)
        else:
            parts = []
            if mag != 1 or (s.pi_exponent == 0 and mono.is_unit):
                parts.append(_mag_text(mag))
            if s.pi_exponent:
                parts.append(f"pi^{s.pi_exponent}")
            if not mono.is_unit:
                parts.append(str(mono))
            body = "*".join(parts)
        chunks.append((s.coeff < 0, body))
    rhs = _join_terms(chunks, latex)
    return f"{lhs}={rhs}" if latex else f"{lhs} = {rhs}"


def _cmd_express(args, started: float) -> int:
    try:
        target = ZetaMonomial.parse(args.monomial)
    except MonomialParseError as exc:
        raise _UsageError(str(exc)) from exc
    cap = _weight_cap(args)
    weight = args.weight if args.weight is not None else target.weight
    if weight > cap:
        raise _UsageError(f"weight {weight} exceeds the weight cap {cap}")
    outcome = express(target, mode=args.mode, weight=args.weight)

    if args.format == "json":
        result = {
            "status": outcome.status,
            "mode": outcome.mode,
            "weight": outcome.weight,
            "detail": outcome.detail,
            "certificate": outcome.certificate.to_payload()
            if outcome.certificate
            else None,
        }
        _print_envelope(
            "express",
            {"monomial": args.monomial, "mode": args.mode, "weight": args.weight},
            result,
            started,
        )
    elif args.format == "latex":
        if outcome.certificate is not None:
            print(_certificate_line(outcome.certificate, latex=True))
        else:
            print(f"% {outcome.status}: {outcome.target.latex()}")
    else:
        print(f"status: {outcome.status}")
        if outcome.detail:
            print(f"detail: {outcome.detail}")
        if outcome.certificate is not None:
            print(_certificate_line(outcome.certificate, latex=False))
    return 0 if outcome.status == "expressible" else 2


def _cmd_survey(args, started: float) -> int:
    lo, hi = args.from_weight, args.to_weight
    if not 3 <= lo <= hi <= SURVEY_WEIGHT_CAP:
        raise _UsageError(f"survey range must satisfy 3 <= from <= to <= {SURVEY_WEIGHT_CAP}")
    report = survey(lo, hi, mode=args.mode)
    if args.format == "json":
        result = {
            "mode": report.mode,
            "records": [
                {
                    "weight": r.weight,
                    "equations": r.equations,
                    "unknowns": r.unknowns,
                    "rank": r.rank,
                    "expressible": [str(m) for m in r.expressible],
                    "inexpressible": [str(m) for m in r.inexpressible],
                    "counting_equations": r.counting_equations,
                    "counting_unknowns": r.counting_unknowns,
                    "counting_deficient": r.counting_deficient,
                    "rank_deficient": r.rank_deficient,
                }
                for r in report.records
            ],
        }
        _print_envelope(
            "survey", {"from": lo, "to": hi, "mode": args.mode}, result, started
        )
    elif args.format == "latex":
        for r in report.records:
            bad = ",".join(str(m) for m in r.inexpressible) or "-"
            print(f"{r.weight} & {r.equations} & {r.unknowns} & {r.rank} & {bad} \\\\")
    else:
        print("  N  eq unk rank counting    inexpressible")
        for r in report.records:
            counting = f"{r.counting_equations}/{r.counting_unknowns}"
            bad = ", ".join(str(m) for m in r.inexpressible) or "-"
            print(
                f"{r.weight:>3} {r.equations:>3} {r.unknowns:>3} {r.rank:>4}"
                f" {counting:>8}    {bad}"
            )
    return 0


def _cmd_partitions(args, started: float) -> int:
    if args.N < 1:
        raise _UsageError("partitions needs N >= 1")
    try:
        flt = PartitionFilter(
            min_part=args.min_part, exact_parts=args.parts, parity=args.parity
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    elems = enumerate_partitions(args.N, flt)
    if args.format == "json":
        result = {
            "n": args.N,
            "filter": {
                "min_part": args.min_part,
                "parts": args.parts,
                "parity": args.parity,
            },
            "partitions": [list(x.part_list()) for x in elems],
            "count": len(elems),
        }
        _print_envelope(
            "partitions",
            {"N": args.N, "min_part": args.min_part, "parts": args.parts, "parity": args.parity},
            result,
            started,
        )
    else:
        for x in elems:
            print(x)
        print(f"count = {len(elems)}")
    return 0


_DISPATCH = {
    "expand": _cmd_expand,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "express": _cmd_express,
    "survey": _cmd_survey,
    "partitions": _cmd_partitions,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    started = time.monotonic()
    try:
        return _DISPATCH[args.command](args, started)
    except _UsageError as exc:
        sys.stderr.write(f"zetalog {args.command}: {exc}\n")
        return 1
    except MonomialParseError as exc:
        sys.stderr.write(f"zetalog {args.command}: {exc}\n")
        return 1
    except PrecisionBudgetError as exc:
        sys.stderr.write(f"zetalog {args.command}: precision budget: {exc}\n")
        return 3
    except ValueError as exc:
        sys.stderr.write(f"zetalog {args.command}: {exc}\n")
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
