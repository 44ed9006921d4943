"""Command line interface: ``qdfcheck run`` and ``qdfcheck list``."""

from __future__ import annotations

import argparse
import os
import sys

from .claims.registry import list_claims
from .report import FORMATS, emit_report
from .runner import RunConfig, UsageError, resolve_field, run_claims

EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qdfcheck", description="Verify the explicit computations claim by claim.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    run = sub.add_parser("run", help="run claims and print a report")
    run.add_argument("--claim", action="append", default=[], metavar="PATTERN",
                     help="claim id or glob pattern; repeatable (default: all)")
    run.add_argument("--field", default=None, help="qq, qq-i or fp:P (used where the claim accepts it)")
    run.add_argument("--order", default="grevlex", choices=["grevlex", "lex"])
    run.add_argument("--budget-pairs", type=int, default=None,
                     help="S-pair budget per basis (default: $QDFCHECK_BUDGET_PAIRS or 100000)")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--report", default="text", choices=FORMATS)
    run.add_argument("--out", default=None, help="write the report here instead of stdout")
    run.add_argument("--jobs", type=int, default=1, help="worker processes")
    run.add_argument("--timings", action="store_true", help="include wall times (breaks byte-identity)")

    ls = sub.add_parser("list", help="list the registered claims")
    ls.add_argument("--verbose", "-v", action="store_true")
    return p


def _list(args) -> int:
    for c in list_claims():
        if args.verbose:
            print(f"{c.id}\n    where:    {c.location}\n    claim:    {c.description}")
            print(f"    expected: {c.expected}\n    field:    {resolve_field(c)} ({c.fields})")
            if c.inputs:
                print(f"    inputs:   {c.inputs}")
        else:
            print(f"{c.id:24s} {c.description}")
    return 0


def _run(args) -> int:
    config = RunConfig(args.field, args.order, args.budget_pairs, args.seed, args.jobs)
    report = run_claims(args.claim, config)
    data = emit_report(report, args.report, args.timings)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return report.exit_code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list":
            return _list(args)
        return _run(args)
    except UsageError as exc:
        print(f"qdfcheck: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        if os.environ.get("QDFCHECK_DEBUG"):
            raise
        print(f"qdfcheck: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
