"""A small definitions calculator: lexer, precedence parser and interpreter."""

from .errors import DefsError, LexicalError, ParseError, RunError
from .interpreter import (
    BoolV,
    Env,
    IntV,
    RealV,
    eval_def,
    eval_exp,
    eval_program,
    format_value,
    initial_env,
    lookup,
)
from .lexer import Kind, Scanner, Token, classify_word, get_line_col, scan_all
from .parser import binding_of, parse, parse_expression, parse_program
from .syntax import Pgm, Pos, ast_to_text, position_of, same_shape


def run_source(source, ext=False, env=None):
    """Lex, parse and evaluate ``source``; return (printed lines, final env)."""
    lines = []
    final = eval_program(parse(source, ext), env, lines)
    return lines, final
