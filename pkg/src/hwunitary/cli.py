"""Command line: ``hwunitary classify | infchar | theta``.

Exit codes for ``classify``: 0 unitary, 1 nonunitary, 2 not a parameter.
``infchar`` exits 2 when the weight is not g-dominant.  Any usage or parse
problem exits 3.

Weights are comma-separated exact rationals ("3/2", "1.5", "-4").  Values
starting with a minus sign need the ``--weight=...`` form so they are not
mistaken for options.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as Q
from typing import Iterable, List, Sequence

from .classify import Status, classify_inf_char, classify_lambda, inf_char_report
from .root_system import E6, E7, Family, Kind, RankError, build, make_weight
from .theta import minimal_type, pi_types
from .weyl import NotGDominantError

EXIT_UNITARY, EXIT_NONUNITARY, EXIT_NOT_PARAMETER, EXIT_USAGE = 0, 1, 2, 3

_EXIT_BY_STATUS = {
    Status.UNITARY: EXIT_UNITARY,
    Status.NONUNITARY: EXIT_NONUNITARY,
    Status.NOT_PARAMETER: EXIT_NOT_PARAMETER,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_rational(token: str) -> Q:
    token = token.strip()
    if not token:
        raise UsageError("empty coordinate")
    try:
        return Q(token)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read {token!r} as an exact rational") from None


def parse_weight(text: str) -> List[Q]:
    body = text.strip().strip("()[]")
    return [parse_rational(t) for t in body.split(",")]


def fmt_rational(x: Q) -> str:
    return str(Q(x))


def fmt_tuple(w: Iterable) -> str:
    return "(" + ", ".join(fmt_rational(c) for c in w) + ")"


def _family(args) -> Family:
    kind = Kind(args.family)
    try:
        if kind in (Kind.SO_EVEN, Kind.SO_ODD):
            if args.n is None:
                raise UsageError(f"--n is required for {kind.value}")
            return Family(kind, args.n)
        if args.n is not None:
            raise UsageError(f"--n does not apply to {kind.value}")
        return E6 if kind is Kind.E6 else E7
    except RankError as e:
        raise UsageError(str(e)) from None


def _weight(family: Family, text: str):
    try:
        return make_weight(family, parse_weight(text))
    except (ValueError, TypeError) as e:
        raise UsageError(str(e)) from None


def dumps(payload) -> str:
    return json.dumps(payload, ensure_ascii=False)


def cmd_classify(args) -> int:
    family = _family(args)
    spec = build(family)
    w = _weight(family, args.weight)
    decide = classify_lambda if args.form == "lambda" else classify_inf_char
    v = decide(spec, w)
    if args.format == "json":
        print(dumps({
            "family": str(family),
            "form": args.form,
            "weight": [fmt_rational(c) for c in w],
            "status": v.status.value,
            "case": v.case_label,
            "verma_irreducible": v.verma_irreducible,
        }))
    else:
        print(f"family: {family}")
        print(f"{'lambda' if args.form == 'lambda' else 'Lambda'}: {fmt_tuple(w)}")
        print(f"verdict: {v.status.value}")
        print(f"case: {v.case_label}")
        print(f"verma_irreducible: {str(v.verma_irreducible).lower()}")
    return _EXIT_BY_STATUS[v.status]


def infchar_payload(family: Family, report) -> dict:
    return {
        "family": str(family),
        "dominant": [fmt_rational(c) for c in report.dominant],
        "unitary": [[fmt_rational(c) for c in w] for w in report.unitary],
        "nonunitary": [[fmt_rational(c) for c in w] for w in report.nonunitary],
    }


def infchar_text(report) -> str:
    lines = [f"unitary ({len(report.unitary)}):"]
    lines += [fmt_tuple(w) for w in report.unitary]
    lines.append(f"nonunitary ({len(report.nonunitary)}):")
    lines += [fmt_tuple(w) for w in report.nonunitary]
    return "\n".join(lines)


def cmd_infchar(args) -> int:
    family = _family(args)
    spec = build(family)
    dom = _weight(family, args.dominant)
    try:
        report = inf_char_report(spec, dom)
    except NotGDominantError as e:
        print(str(e), file=sys.stderr)
        return EXIT_NOT_PARAMETER
    print(dumps(infchar_payload(family, report)) if args.format == "json" else infchar_text(report))
    return 0


def cmd_theta(args) -> int:
    if args.max_level < 0:
        raise UsageError("--max-level must be non-negative")
    rows = pi_types(args.m, args.max_level)
    low = minimal_type(args.m)
    if args.format == "json":
        print(dumps({
            "m": args.m,
            "max_level": args.max_level,
            "minimal": list(low.as_row()),
            "types": [list(t.as_row()) for t in rows],
        }))
        return 0
    print(f"minimal type: a={low.a} b={low.b} c={low.c} n={low.n} h'={low.hprime_weight}")
    print("a\tb\tc\tn\th'")
    for t in rows:
        print("\t".join(str(x) for x in t.as_row()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hwunitary", description="Unitarity of highest weight modules for Hermitian groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_opts(p):
        p.add_argument("--family", required=True, choices=[k.value for k in Kind])
        p.add_argument("--n", type=int, help="rank parameter for so-even / so-odd")

    p = sub.add_parser("classify", help="decide unitarity of one weight")
    family_opts(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--form", choices=["lambda", "infchar"], default="lambda")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("infchar", help="unitary and nonunitary conjugates of a g-dominant weight")
    family_opts(p)
    p.add_argument("--dominant", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_infchar)

    p = sub.add_parser("theta", help="types of Pi[m-2]'")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-level", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_theta)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"hwunitary: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
