"""Command-line front end.

    qheis verify --suite table1 --q symbolic --bound idx=3 [--json out.json] [--jobs N]
    qheis eval --q symbolic "A*B - q*B*A - I"

Exit status: 0 when nothing failed, 1 when any entry failed, 2 on usage
errors (unknown suite, malformed q or bounds, expression syntax errors).
"""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional

from .coeff import QValue
from .expr import ParseError, EvalError, eval_expr, parse, pretty
from .suites import SUITES, SuiteConfig, run_suite


def _parse_bounds(pairs: Optional[List[str]]) -> Dict[str, int]:
    out: Dict[str, int] = {}
    for item in pairs or []:
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise ValueError("--bound expects name=value, got %r" % item)
        try:
            out[name] = int(value)
        except ValueError as exc:
            raise ValueError("--bound %s needs an integer, got %r" % (name, value)) from exc
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qheis",
        description="exact verifier for the q-deformed Heisenberg algebra AB - qBA = I",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    verify.add_argument("--q", default="symbolic", help="'symbolic' or a rational p/r")
    verify.add_argument(
        "--bound", action="append", metavar="NAME=VALUE", help="override a suite bound"
    )
    verify.add_argument("--json", metavar="PATH", help="write the JSON report here")
    verify.add_argument("--jobs", type=int, default=1, help="parallel workers")
    verify.add_argument(
        "--quiet", action="store_true", help="print only the summary line"
    )

    ev = sub.add_parser("eval", help="evaluate an expression in H(q)")
    ev.add_argument("--q", default="symbolic", help="'symbolic' or a rational p/r")
    ev.add_argument("expression")
    return parser


def _cmd_verify(args) -> int:
    try:
        q = QValue.parse(args.q)
        bounds = _parse_bounds(args.bound)
        cfg = SuiteConfig(
            suite=args.suite,
            q=q,
            bounds=bounds,
            output="json" if args.json else "text",
            parallelism=max(1, args.jobs),
        )
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    report = run_suite(cfg)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
            fh.write("\n")
    if args.quiet:
        s = report.summary
        print(
            "suite=%s q=%s pass=%d fail=%d skipped=%d"
            % (report.suite, report.q, s["pass"], s["fail"], s["skipped"])
        )
    else:
        print(report.render_text())
    return 0 if report.all_passed else 1


def _cmd_eval(args) -> int:
    try:
        q = QValue.parse(args.q)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    try:
        ast = parse(args.expression)
        result = eval_expr(ast, q)
    except (ParseError, EvalError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    print("expression:   %s" % pretty(ast))
    print("q:            %s" % q.render())
    print("normal form:  %s" % result.normal.render())
    for d, part in result.graded.parts.items():
        print("  degree %+d:  %s" % (d, part.render()))
    if result.lie_coords is not None:
        print("[A,B]-basis:  %s" % result.lie_coords.render())
    if result.membership is None:
        print("membership:   undecided (q = %s is degenerate)" % q.render())
    else:
        where = "L(0)" if result.membership_mode == "zero" else "L(q)"
        print(
            "membership:   %s %s"
            % ("member of" if result.membership else "NOT a member of", where)
        )
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "eval":
        return _cmd_eval(args)
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
