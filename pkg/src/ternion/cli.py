"""Command-line calculator for ternion expressions.

    ternion --eval "u*u"            evaluate once
    ternion --file exprs.txt        one expression per line ('#' comments)
    ternion                         interactive loop on stdin

Exit status: 0 success, 1 evaluation error, 2 lex/parse error, 3 I/O or usage.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional, TextIO

from .expr import (
    EvalError,
    ExprError,
    dump_json,
    evaluate,
    format_result,
    json_value,
    parse_text,
    result_kind,
)
from .structure import DEFAULT_TOL

EXIT_OK = 0
EXIT_EVAL = 1
EXIT_PARSE = 2
EXIT_USAGE = 3

MODES = ("tuple", "split", "json")

HELP = """\
expressions: numbers, ternion literals (a, b, c), + - * / ^n, unary -
constants:   one u v delta j oneD oneG iG zero
functions:   conj norm A B projD projG inv reduce split
commands:    :mode tuple|split|json   :help   :quit"""


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="ternion", description="Evaluate ternion expressions.")
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--eval", metavar="EXPR", help="evaluate a single expression")
    source.add_argument("--file", metavar="PATH", help="evaluate one expression per line")
    parser.add_argument("--json", action="store_true", help="emit one JSON object per result")
    parser.add_argument(
        "--tol", type=float, default=DEFAULT_TOL, help="invertibility tolerance (default 1e-9)"
    )
    return parser


class _Session:
    def __init__(self, mode: str, tol: float, out: TextIO, err: TextIO):
        self.mode = mode
        self.tol = tol
        self.out = out
        self.err = err

    def run(self, text: str) -> int:
        """Evaluate one expression, print the outcome, return its exit code."""
        try:
            value = evaluate(parse_text(text), self.tol)
        except ExprError as exc:
            code = EXIT_EVAL if isinstance(exc, EvalError) else EXIT_PARSE
            if self.mode == "json":
                record = {
                    "expr": text,
                    "kind": "error",
                    "value": {"message": exc.message, "pos": exc.pos},
                }
                print(dump_json(record), file=self.out)
            else:
                print(f"error: {exc.message}", file=self.err)
            return code
        if self.mode == "json":
            record = {"expr": text, "kind": result_kind(value), "value": json_value(value)}
            print(dump_json(record), file=self.out)
        else:
            print(format_result(value, self.mode), file=self.out)
        return EXIT_OK


def _run_file(session: _Session, path: str) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read {path}: {exc}", file=session.err)
        return EXIT_USAGE
    status = EXIT_OK
    for line in lines:
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        status = max(status, session.run(text))
    return status


def _repl(session: _Session, inp: TextIO) -> int:
    interactive = inp.isatty()
    while True:
        if interactive:
            print("> ", end="", file=session.out, flush=True)
        line = inp.readline()
        if not line:
            return EXIT_OK
        text = line.strip()
        if not text:
            continue
        if text.startswith(":"):
            cmd, _, arg = text[1:].partition(" ")
            arg = arg.strip()
            if cmd == "quit":
                return EXIT_OK
            if cmd == "help":
                print(HELP, file=session.out)
            elif cmd == "mode" and arg in MODES:
                session.mode = arg
            elif cmd == "mode":
                print(f"error: mode must be one of {', '.join(MODES)}", file=session.err)
            else:
                print(f"error: unknown command :{cmd} (try :help)", file=session.err)
            continue
        session.run(text)


def run_cli(
    args: List[str],
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        opts = parser.parse_args(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    if not opts.tol >= 0.0:
        print("usage error: --tol must be a nonnegative number", file=stderr)
        return EXIT_USAGE

    session = _Session("json" if opts.json else "tuple", opts.tol, stdout, stderr)
    if opts.eval is not None:
        return session.run(opts.eval)
    if opts.file is not None:
        return _run_file(session, opts.file)
    return _repl(session, stdin)


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
