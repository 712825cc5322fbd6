"""Command-line evaluator, REPL and transcript checker.

Exit codes: 0 success, 1 parse error (or transcript mismatch), 2 numeric
error, 64 bad usage.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from typing import List, Optional, TextIO, Tuple

from .core import Hyperbolic, coerce
from .errors import DomainError, NumError, ParseError
from .scalar import ScalarKind, join_kind
from .textio import evaluate, format, parse_exprs, uses_float

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NUMERIC = 2
EXIT_USAGE = 64
EXIT_MISMATCH = 1

MODES = ("eval", "repl", "check-transcript")
OUTPUT_KINDS = ("auto", "float", "rational")
PROMPT = ">> "


class UsageError(Exception):
    pass


@dataclasses.dataclass(frozen=True)
class CliConfig:
    mode: str
    output_kind: str = "auto"
    expression: Optional[str] = None
    transcript_path: Optional[str] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.output_kind not in OUTPUT_KINDS:
            raise UsageError(f"unknown output kind {self.output_kind!r}")
        if self.mode == "eval" and self.expression is None:
            raise UsageError("eval mode needs an expression")
        if self.mode == "check-transcript" and self.transcript_path is None:
            raise UsageError("check-transcript mode needs a transcript path")


def _apply_output_kind(values: List[Hyperbolic], output_kind: str) -> List[Hyperbolic]:
    if output_kind == "float":
        return [coerce(v, ScalarKind.FLOAT) for v in values]
    if output_kind == "rational":
        return [coerce(v, ScalarKind.RATIONAL) for v in values]
    return values


def evaluate_line(text: str, output_kind: str = "auto") -> str:
    """Evaluate one input line and return its rendered result.

    A comma-separated list is promoted to a common kind and printed as a
    tuple, e.g. ``1//2, 1`` gives ``(1//2+0//1j, 1//1+0//1j)``.
    """
    exprs = parse_exprs(text)
    if output_kind == "rational":
        for e in exprs:
            culprit = uses_float(e)
            if culprit is not None:
                raise DomainError("a FLOAT value entered an exact (rational) computation", culprit.span)
    values = _apply_output_kind([evaluate(e) for e in exprs], output_kind)
    if len(values) == 1:
        return format(values[0])
    k = values[0].kind
    for v in values[1:]:
        k = join_kind(k, v.kind)
    values = [coerce(v, k) for v in values]
    return "(" + ", ".join(format(v) for v in values) + ")"


def headline(err: NumError) -> str:
    start = err.span[0] if err.span else 0
    return f"error: {err.label} at offset {start}: {err.message}"


def diagnostic(err: NumError, source: str) -> str:
    """Headline plus the source line with the failing span underlined."""
    shown = source.encode("utf-8", "surrogatepass").decode("latin-1")
    shown = "".join(c if c.isprintable() and c.isascii() else "?" for c in shown)
    start, end = err.span if err.span else (0, 1)
    start = min(start, len(shown))
    end = max(start + 1, min(end, len(shown)))
    return f"{headline(err)}\n  {shown}\n  {' ' * start}{'^' * (end - start)}"


def respond(text: str, output_kind: str = "auto") -> Tuple[int, str]:
    """Evaluate ``text``; return ``(exit code, result or headline)``."""
    try:
        return EXIT_OK, evaluate_line(text, output_kind)
    except ParseError as err:
        return EXIT_PARSE, headline(err)
    except NumError as err:
        return EXIT_NUMERIC, headline(err)


def _run_once(text: str, output_kind: str, out: TextIO, err_out: TextIO) -> int:
    try:
        out.write(evaluate_line(text, output_kind) + "\n")
        return EXIT_OK
    except ParseError as err:
        err_out.write(diagnostic(err, text) + "\n")
        return EXIT_PARSE
    except NumError as err:
        err_out.write(diagnostic(err, text) + "\n")
        return EXIT_NUMERIC


def _run_repl(config: CliConfig, stdin: TextIO, out: TextIO, err_out: TextIO) -> int:
    interactive = stdin.isatty()
    while True:
        if interactive:
            out.write(PROMPT)
            out.flush()
        line = stdin.readline()
        if not line:
            if interactive:
                out.write("\n")
            return EXIT_OK
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        _run_once(line, config.output_kind, out, err_out)
        out.flush()


def read_transcript(path: str) -> List[Tuple[int, str, str]]:
    """Parse a transcript file into ``(line number, input, expected)`` triples.

    Lines starting with ``>> `` are inputs and the next line is the expected
    output. Blank lines and ``#`` comments between entries are ignored.
    """
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    entries = []
    i = 0
    while i < len(lines):
        line = lines[i]
        if line.startswith(PROMPT):
            if i + 1 >= len(lines):
                raise UsageError(f"{path}:{i + 1}: input has no expected output line")
            entries.append((i + 1, line[len(PROMPT):], lines[i + 1]))
            i += 2
        elif not line.strip() or line.startswith("#"):
            i += 1
        else:
            raise UsageError(f"{path}:{i + 1}: expected '>> ' input line, found {line!r}")
    return entries


def _check_transcript(config: CliConfig, out: TextIO, err_out: TextIO) -> int:
    try:
        entries = read_transcript(config.transcript_path)
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read transcript: {exc}") from None
    failures = 0
    for lineno, text, expected in entries:
        _, actual = respond(text, config.output_kind)
        if actual != expected:
            failures += 1
            err_out.write(
                f"{config.transcript_path}:{lineno}: mismatch for {text!r}\n"
                f"  expected: {expected}\n  actual:   {actual}\n"
            )
    out.write(f"{len(entries) - failures}/{len(entries)} transcript entries match\n")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def run(config: CliConfig, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        if config.mode == "eval":
            return _run_once(config.expression, config.output_kind, stdout, stderr)
        if config.mode == "check-transcript":
            return _check_transcript(config, stdout, stderr)
        return _run_repl(config, stdin, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"hypernum: {exc}\n")
        return EXIT_USAGE


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="hypernum", description="Evaluate hyperbolic-number expressions.")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--eval", metavar="EXPR", dest="expression", help="evaluate one expression and exit")
    mode.add_argument("--repl", action="store_true", help="read one expression per line from stdin")
    mode.add_argument("--check-transcript", metavar="PATH", dest="transcript_path",
                      help="replay a '>> input' / output transcript and compare byte-exactly")
    parser.add_argument("--output-kind", choices=OUTPUT_KINDS, default="auto",
                        help="force the result to FLOAT, or audit that it stays exact (rational)")
    return parser


def config_from_args(argv: Optional[List[str]] = None) -> CliConfig:
    args = build_parser().parse_args(argv)
    if args.expression is not None:
        mode = "eval"
    elif args.transcript_path is not None:
        mode = "check-transcript"
    else:
        mode = "repl"
    return CliConfig(mode, args.output_kind, args.expression, args.transcript_path)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = config_from_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"hypernum: {exc}\n")
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
