"""The solidus command line: REPL, batch runner and headless check mode.

Bare lines evaluate expressions and print canonical forms; colon commands
expose classification, comparison, weak suprema, naturals and the check suite.
Exit codes: 0 success, 1 check failures (in --check mode), 2 usage errors.
"""

from __future__ import annotations

import argparse
import shlex
import sys
from typing import Optional

from .checks import exit_code, format_reports, run_catalog
from .errors import SolidusError, UnknownCheckError
from .external import classify, ext_compare, render_external
from .generate import GeneratorConfig
from .halfline import zup_finite
from .naturals import archimedean_witness, is_natural
from .neutrix import NeutrixKind
from .parser import EvalError, ParseError, evaluate, parse, parse_expr_list


HELP_TEXT = """\
commands:
  <expr>                      evaluate and print the canonical form
  :classify <expr>            Precise | PureNeutrix | ZerolessNonPrecise
  :cmp <expr> , <expr>        LT | EQ | GT
  :zup <expr> {, <expr>}      weak supremum (maximum) of the listed values
  :nat <expr>                 whether the value is a natural of this model
  :arch <expr> , <expr>       natural z with z*x > y (requires 0 < x < y)
  :check [--seed S] [--count N] [--only ID]
                              run the axiom/theorem check suite
  :help                       this text
  :quit                       leave the REPL
symbols: rho (positive infinite), o (infinitesimals), L (limited), M (everything)
"""


def _values(arg_text: str, expected: Optional[int] = None):
    exprs = parse_expr_list(arg_text)
    if expected is not None and len(exprs) != expected:
        raise SolidusError(f"expected {expected} comma-separated expressions")
    values = []
    for expr in exprs:
        value = evaluate(expr)
        if isinstance(value, bool):
            raise SolidusError("expected a value, found a comparison")
        values.append(value)
    return values


def _run_checks_from_args(tokens: list[str]) -> tuple[str, int]:
    parser = argparse.ArgumentParser(prog=":check", add_help=False)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--only", type=str, default=None)
    try:
        ns = parser.parse_args(tokens)
    except SystemExit:
        return "usage: :check [--seed S] [--count N] [--only ID]", 2
    cfg = GeneratorConfig(seed=ns.seed)
    try:
        reports = run_catalog(cfg, n=ns.count, only=ns.only)
    except UnknownCheckError as exc:
        return f"error: unknown check id {exc.args[0]!r}", 2
    return format_reports(reports), exit_code(reports)


def run_command(line: str) -> str:
    """Execute one REPL line and return the rendered output (never raises)."""
    try:
        return _dispatch(line)
    except (ParseError, EvalError, SolidusError) as exc:
        return f"error: {exc}"


def _dispatch(line: str) -> str:
    line = line.strip()
    if not line or line.startswith("#"):
        return ""
    if not line.startswith(":"):
        value = evaluate(parse(line))
        if isinstance(value, bool):
            return "true" if value else "false"
        return render_external(value)

    command, _, rest = line.partition(" ")
    rest = rest.strip()
    if command in (":quit", ":q", ":exit"):
        return ":quit"
    if command == ":help":
        return HELP_TEXT
    if command == ":classify":
        (value,) = _values(rest, 1)
        return classify(value).value
    if command == ":cmp":
        a, b = _values(rest, 2)
        return ext_compare(a, b).name
    if command == ":zup":
        values = _values(rest)
        return render_external(zup_finite(values))
    if command == ":nat":
        (value,) = _values(rest, 1)
        if value.nx.kind is not NeutrixKind.ZERO:
            return "false"
        return "true" if is_natural(value.rep) else "false"
    if command == ":arch":
        x, y = _values(rest, 2)
        witness = archimedean_witness(x, y)
        return str(witness)
    if command == ":check":
        output, _ = _run_checks_from_args(shlex.split(rest))
        return output
    raise SolidusError(f"unknown command {command!r}")


def repl(stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    interactive = stdin.isatty() if hasattr(stdin, "isatty") else False
    if interactive:
        print("solidus -- exact external-number arithmetic (:help for commands)", file=stdout)
    while True:
        if interactive:
            stdout.write("solidus> ")
            stdout.flush()
        line = stdin.readline()
        if not line:
            break
        out = run_command(line)
        if out == ":quit":
            break
        if out:
            print(out, file=stdout)
    return 0


def run_batch(path: str, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in lines:
        out = run_command(line)
        if out == ":quit":
            break
        if out:
            print(out, file=stdout)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="solidus",
        description="Exact arithmetic for external numbers, with a property-based axiom harness.",
    )
    parser.add_argument("--batch", metavar="FILE", help="execute commands from FILE line by line")
    parser.add_argument("--check", action="store_true", help="run the check suite headlessly")
    parser.add_argument("--seed", type=int, default=0, help="generator seed for --check")
    parser.add_argument("--count", type=int, default=200, help="samples per check for --check")
    parser.add_argument("--only", type=str, default=None, help="check id or prefix filter for --check")
    ns = parser.parse_args(argv)

    if ns.check:
        cfg = GeneratorConfig(seed=ns.seed)
        try:
            reports = run_catalog(cfg, n=ns.count, only=ns.only)
        except UnknownCheckError as exc:
            print(f"error: unknown check id {exc.args[0]!r}", file=sys.stderr)
            return 2
        print(format_reports(reports))
        return exit_code(reports)
    if ns.batch:
        return run_batch(ns.batch)
    return repl()


if __name__ == "__main__":
    sys.exit(main())
