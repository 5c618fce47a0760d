"""Command-line interface: one-shot eval, REPL, and batch processing.

Exit codes: 0 success, 1 query error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .evaluator import evaluate_line, run_batch
from .hypotheses import (
    EMPTY_CONTEXT,
    HypothesisContext,
    InconsistentContextError,
    ZeroSharp,
    build_context,
)

_ASSUME_FLAGS = ("gch", "v=l", "sharp", "no-sharp")


def _context_from_flags(spec: str | None, parser: argparse.ArgumentParser) -> HypothesisContext:
    if not spec:
        return EMPTY_CONTEXT
    gch = False
    v_equals_l = False
    zero_sharp = ZeroSharp.UNKNOWN
    for flag in spec.split(","):
        flag = flag.strip().lower()
        if flag == "gch":
            gch = True
        elif flag == "v=l":
            v_equals_l = True
        elif flag == "sharp":
            zero_sharp = ZeroSharp.EXISTS
        elif flag == "no-sharp":
            zero_sharp = ZeroSharp.NOT_EXISTS
        else:
            parser.error(f"unknown assumption {flag!r}; expected one of {', '.join(_ASSUME_FLAGS)}")
    try:
        return build_context(gch=gch, v_equals_l=v_equals_l, zero_sharp=zero_sharp)
    except InconsistentContextError as err:
        parser.error(str(err))
    raise AssertionError("unreachable")


def _emit(results, as_json: bool, out) -> int:
    status = 0
    for result in results:
        if result.verdict == "error":
            status = 1
        if as_json:
            out.write(result.to_json_line() + "\n")
        else:
            out.write(result.pretty() + "\n")
    return status


def _cmd_eval(args, parser) -> int:
    ctx = _context_from_flags(args.assume, parser)
    results, _ = evaluate_line(args.expr, ctx)
    return _emit(results, args.json, sys.stdout)


def _cmd_repl(args, parser) -> int:
    ctx = _context_from_flags(args.assume, parser)
    print(f"alephcalc {__version__} — cardinal arithmetic under declared hypotheses")
    print("enter statements (e.g. 'assume GCH' or 'exp_lt(aleph(w), aleph(1))'); 'quit' to leave")
    while True:
        try:
            line = input("> ")
        except EOFError:
            print()
            return 0
        stripped = line.strip()
        if not stripped:
            continue
        if stripped in ("quit", "exit"):
            return 0
        if stripped == "context":
            print(f"context: {ctx.describe()}")
            continue
        before = ctx
        results, ctx = evaluate_line(stripped, ctx)
        if not results and ctx is not before:
            print(f"context: {ctx.describe()}")
        for result in results:
            print(result.pretty())


def _cmd_batch(args, parser) -> int:
    ctx = _context_from_flags(args.assume, parser)
    try:
        with open(args.file, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as err:
        parser.error(f"cannot read {args.file}: {err}")
        raise AssertionError("unreachable")
    return run_batch(lines, ctx, sys.stdout, as_json=args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alephcalc",
        description="exact infinite-cardinal arithmetic under declared set-theoretic hypotheses",
    )
    parser.add_argument("--version", action="version", version=f"alephcalc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one statement (or ';'-separated session)")
    p_eval.add_argument("-e", "--expr", required=True, help="statement to evaluate")
    p_eval.add_argument("--assume", help="comma list of gch,v=l,sharp,no-sharp")
    p_eval.add_argument("--json", action="store_true", help="machine-readable one-line records")
    p_eval.set_defaults(func=_cmd_eval)

    p_repl = sub.add_parser("repl", help="interactive session")
    p_repl.add_argument("--assume", help="comma list of gch,v=l,sharp,no-sharp")
    p_repl.set_defaults(func=_cmd_repl)

    p_batch = sub.add_parser("batch", help="run a file of statements, one per line")
    p_batch.add_argument("file", help="input file; '#' lines are comments")
    p_batch.add_argument("--assume", help="comma list of gch,v=l,sharp,no-sharp")
    p_batch.add_argument("--json", action="store_true", help="machine-readable one-line records")
    p_batch.set_defaults(func=_cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
