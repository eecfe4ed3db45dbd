"""Command line entry point: run verification suites and write a report."""
from __future__ import annotations

import argparse
import sys

from .report import SUITES, ConfigError, SuiteConfig, exit_code, format_json, format_text, list_checks, run
from .normed import ALGEBRAS


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser():
    p = _Parser(prog="superlefschetz", description="Exact checks of super Lefschetz identities on flat models.")
    p.add_argument("--algebra", choices=ALGEBRAS, default="R")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--suite", action="append", choices=SUITES, default=[],
                   help="repeatable; default is every suite applicable to the algebra")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--report", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--list", action="store_true", help="list check ids with their anchors")
    p.add_argument("--timing", action="store_true", help="include millis in json records")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if not -(2 ** 63) <= args.seed < 2 ** 63:
        print("superlefschetz: error: seed must be a 64-bit integer", file=sys.stderr)
        return 2
    config = SuiteConfig(
        algebra=args.algebra,
        n=args.n,
        suites=tuple(args.suite),
        seed=args.seed,
        max_degree=args.max_degree,
        report=args.report,
        timing=args.timing,
    )
    try:
        config.validate()
    except ConfigError as e:
        print(f"superlefschetz: error: {e}", file=sys.stderr)
        return 2
    if args.list:
        text = list_checks(config)
        code = 0
    else:
        results = run(config)
        text = format_json(config, results) if args.report == "json" else format_text(results)
        code = exit_code(results)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
