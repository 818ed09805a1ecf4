"""Batch driver: ``defs [--ext] [--no-prelude] [--dump-tokens | --dump-ast] <file | ->``.

Exit status: 0 ok, 1 lexical error, 2 parse error, 3 runtime error,
4 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .errors import LexicalError, ParseError, RunError
from .interpreter import Env, eval_program, initial_env
from .lexer import dump_tokens, scan_all
from .parser import parse_program
from .syntax import ast_to_text

EXIT_OK, EXIT_LEXICAL, EXIT_PARSE, EXIT_RUNTIME, EXIT_SYSTEM = range(5)


@dataclass
class RunConfig:
    input: str = "-"
    ext: bool = False
    dump_tokens: bool = False
    dump_ast: bool = False
    no_prelude: bool = False


def render_error(kind: str, message, pos=None) -> str:
    if kind == "system":
        return f"Exception: {message}"
    where = f"at line {pos[0]}, column {pos[1]}"
    if kind == "lexical":
        return f"Lexical error: {message} {where}"
    if kind == "parse":
        return f"Parse-error {where}"
    if kind == "runtime":
        return f"Runtime error: {message} {where}"
    raise ValueError(f"unknown error kind {kind!r}")


class LineSink:
    """Writes each evaluated binding as soon as it is produced."""

    def __init__(self, stream):
        self.stream = stream

    def append(self, line):
        self.stream.write(line + "\n")
        self.stream.flush()


def _read_source(path, stdin):
    if path == "-":
        return stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read()
    with open(path, "rb") as f:
        return f.read()


def run(config: RunConfig, stdout=None, stderr=None, stdin=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    stdin = sys.stdin if stdin is None else stdin

    def report(kind, message, pos=None):
        stderr.write(render_error(kind, message, pos) + "\n")

    try:
        source = _read_source(config.input, stdin)
        tokens = scan_all(source, config.ext)
        if config.dump_tokens:
            stdout.write(dump_tokens(tokens) + "\n")
            return EXIT_OK
        program = parse_program(tokens, config.ext)
        if config.dump_ast:
            text = ast_to_text(program)
            stdout.write(text + "\n" if text else "")
            return EXIT_OK
        env = Env() if config.no_prelude else initial_env()
        eval_program(program, env, LineSink(stdout))
    except LexicalError as exc:
        report("lexical", exc.message, exc.pos)
        return EXIT_LEXICAL
    except ParseError as exc:
        report("parse", None, exc.pos)
        return EXIT_PARSE
    except RunError as exc:
        report("runtime", exc.message, exc.pos)
        return EXIT_RUNTIME
    except OSError as exc:
        report("system", f"{exc.strerror or exc}: {config.input}")
        return EXIT_SYSTEM
    except RecursionError:
        report("system", "nesting too deep")
        return EXIT_SYSTEM
    return EXIT_OK


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_SYSTEM, f"Exception: {message}\n")


def build_arg_parser() -> argparse.ArgumentParser:
    ap = _ArgumentParser(prog="defs", description="Evaluate a program of definitions.")
    ap.add_argument("input", help="source file, or - for standard input")
    ap.add_argument("--ext", action="store_true", help="enable if/while definitions")
    ap.add_argument("--no-prelude", action="store_true", help="start without pi, e and one")
    dump = ap.add_mutually_exclusive_group()
    dump.add_argument("--dump-tokens", action="store_true", help="print the token stream and stop")
    dump.add_argument("--dump-ast", action="store_true", help="print the syntax tree and stop")
    return ap


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    config = RunConfig(
        input=args.input,
        ext=args.ext,
        dump_tokens=args.dump_tokens,
        dump_ast=args.dump_ast,
        no_prelude=args.no_prelude,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
