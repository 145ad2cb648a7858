"""Command-line front end: ``pinstructures decide|classes|wu|verify|catalog``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import acceptance, commands
from .deciders import DEFAULT_MAX_PAIRS, DecisionReport
from .errors import (
    CorruptRingData,
    InvariantViolation,
    PinStructuresError,
    SearchSpaceExceeded,
    UnsupportedDegree,
    UnsupportedParameter,
)
from .expr import ParseError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSUPPORTED = 2
EXIT_INTERNAL = 3


class _Style:
    def __init__(self, stream):
        self.on = "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()

    def _wrap(self, code: str, text: str) -> str:
        return f"\033[{code}m{text}\033[0m" if self.on else text

    def yes(self, text):
        return self._wrap("32", text)

    def no(self, text):
        return self._wrap("31", text)

    def bold(self, text):
        return self._wrap("1", text)


def _flag(style: _Style, value: bool) -> str:
    return style.yes("yes") if value else style.no("no")


def _report_text(r: DecisionReport, style: _Style) -> str:
    rows = [
        ("orientable", _flag(style, r.orientable)),
        ("spin", _flag(style, r.spin)),
        ("pin+", _flag(style, r.pin_plus)),
        ("pin-", _flag(style, r.pin_minus)),
        ("pin^c", _flag(style, r.pin_c)),
        ("Lipschitz", r.lipschitz["status"]),
    ]
    out = [style.bold(f"{r.expression}  (dimension {r.dimension})")]
    out += [f"  {k:<11}{v}" for k, v in rows]
    w = r.lipschitz.get("witness")
    if w:
        out.append(f"  witness    E = {w['bundle']}, w2(E) = {w['w2']}")
    out.append("")
    out += [f"  - {t}" for t in r.trace]
    return "\n".join(out)


def _mapping_text(d: dict[str, Any]) -> str:
    out = []
    for k, v in d.items():
        if isinstance(v, dict):
            out.append(f"{k}:")
            out += [f"  {kk}: {vv}" for kk, vv in v.items()]
        elif isinstance(v, list):
            out.append(f"{k}: {', '.join(map(str, v)) or '(none)'}")
        else:
            out.append(f"{k}: {v}")
    return "\n".join(out)


def _emit(args, payload: Any, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _cmd_decide(args) -> int:
    report = commands.decide_expression(args.expr, args.max_pairs)
    _emit(args, report.to_json(), _report_text(report, _Style(sys.stdout)))
    return EXIT_OK


def _cmd_classes(args) -> int:
    d = commands.classes_report(args.expr, args.max_degree)
    _emit(args, d, _mapping_text(d))
    return EXIT_OK


def _cmd_wu(args) -> int:
    d = commands.wu_report(args.expr)
    _emit(args, d, _mapping_text(d))
    return EXIT_OK


def _cmd_catalog(args) -> int:
    d = commands.catalog_document(args.expr)
    print(json.dumps(d, indent=2, ensure_ascii=False))
    return EXIT_OK


def _cmd_verify(args) -> int:
    style = _Style(sys.stdout)
    results = []
    for number, _, _ in acceptance.CRITERIA:
        res = acceptance.run_criterion(number)
        results.append(res)
        if args.format == "text":
            mark = style.yes("PASS") if res.passed else style.no("FAIL")
            print(f"{mark}  {res.number}. {res.title}: {res.detail} ({res.seconds:.2f}s)", flush=True)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps({
            "passed": ok,
            "criteria": [
                {"number": r.number, "title": r.title, "passed": r.passed,
                 "detail": r.detail, "seconds": round(r.seconds, 3)}
                for r in results
            ],
        }, indent=2, ensure_ascii=False))
    else:
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return EXIT_OK if ok else EXIT_INTERNAL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pinstructures", description="Decide spin-type structures on closed manifolds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, expr=True):
        p = sub.add_parser(name, help=help_)
        if expr:
            p.add_argument("expr", help='manifold expression, e.g. "RP(2) * RP(2) * S(1)"')
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("decide", _cmd_decide, "orientation, spin, pin±, pin^c and Lipschitz verdicts")
    p.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS,
                   help="cap on (α, β) pairs in the Lipschitz search")
    p = add("classes", _cmd_classes, "Stiefel–Whitney classes and lift subspaces")
    p.add_argument("--max-degree", type=int, default=None)
    add("wu", _cmd_wu, "Wu classes and the Stiefel–Whitney cross-check")
    add("verify", _cmd_verify, "run the acceptance suite", expr=False)
    add("catalog", _cmd_catalog, "dump the descriptor as a catalog document (always JSON)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnsupportedParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedDegree, SearchSpaceExceeded) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (InvariantViolation, CorruptRingData) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except PinStructuresError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
