"""Precedence-climbing parser.

Produces the same trees a yacc parser would build from the ambiguous
expression grammar plus this declaration ladder (lowest first)::

    %nonassoc ELSE
    %right    OR
    %right    AND
    %nonassoc NOT
    %nonassoc EQ
    %left     PLUS MINUS
    %left     TIMES DIVIDE
    %nonassoc UMINUS

Every operand position has a minimum binding level.  A binary operator
of level L takes its right operand at L (right-assoc) or L+1; a prefix
operator of level P takes its operand at P+1 and may itself only start
an operand whose minimum is at most P.  That is why ``--x``,
``not not x`` and ``a = not b`` are rejected.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from . import syntax as ast
from .errors import ParseError
from .lexer import Kind, Token, scan_all

LEFT, RIGHT, NONASSOC = "left", "right", "nonassoc"


class PrecEntry(NamedTuple):
    level: int
    assoc: str


ELSE_LEVEL = 1
NOT_LEVEL = 4
UMINUS_LEVEL = 8

_BINARY = {
    Kind.OR: (PrecEntry(2, RIGHT), ast.Or),
    Kind.AND: (PrecEntry(3, RIGHT), ast.And),
    Kind.EQ: (PrecEntry(5, NONASSOC), ast.Eq),
    Kind.PLUS: (PrecEntry(6, LEFT), ast.Plus),
    Kind.MINUS: (PrecEntry(6, LEFT), ast.Minus),
    Kind.TIMES: (PrecEntry(7, LEFT), ast.Times),
    Kind.DIVIDE: (PrecEntry(7, LEFT), ast.Divide),
}

PRECEDENCE = {kind: entry for kind, (entry, _) in _BINARY.items()}
PRECEDENCE[Kind.ELSE] = PrecEntry(ELSE_LEVEL, NONASSOC)


def binding_of(token) -> Optional[PrecEntry]:
    kind = token.kind if isinstance(token, Token) else token
    return PRECEDENCE.get(kind)


class Parser:
    def __init__(self, tokens, ext: bool = False):
        self.tokens = list(tokens)
        if not self.tokens or self.tokens[-1].kind is not Kind.EOF:
            raise ValueError("token stream must end with EOF")
        self.index = 0
        self.ext = ext

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.tokens[self.index]
        if tok.kind is not Kind.EOF:
            self.index += 1
        return tok

    def expect(self, kind: Kind) -> Token:
        tok = self.token
        if tok.kind is not kind:
            raise ParseError(tok.pos, f"expected {kind.value}, found {tok.kind.value}")
        return self.advance()

    def fail(self, what="unexpected"):
        tok = self.token
        raise ParseError(tok.pos, f"{what} {tok.kind.value}")

    # -- definitions ------------------------------------------------------

    def parse_program(self) -> ast.Pgm:
        defs = []
        while self.token.kind is not Kind.EOF:
            defs.append(self.parse_def())
        return ast.Pgm(defs)

    def parse_def(self):
        tok = self.token
        if tok.kind is Kind.ID:
            self.advance()
            self.expect(Kind.EQ)
            return ast.Bind(tok.value, self.parse_exp(0))
        if self.ext and tok.kind is Kind.IF:
            self.advance()
            cond = self.parse_exp(0)
            self.expect(Kind.THEN)
            then = self.parse_def()
            self.expect(Kind.ELSE)
            return ast.CondDef(cond, then, self.parse_def(), tok.pos)
        if self.ext and tok.kind is Kind.WHILE:
            self.advance()
            cond = self.parse_exp(0)
            self.expect(Kind.DO)
            if self.token.kind is Kind.END:
                self.fail("empty loop body at")
            body = []
            while self.token.kind is not Kind.END:
                body.append(self.parse_def())
            self.advance()
            return ast.WhileDef(cond, body, tok.pos)
        self.fail("definition cannot start with")

    # -- expressions ------------------------------------------------------

    def parse_exp(self, min_level: int = 0):
        left = self.parse_prefix(min_level)
        chained = None
        while True:
            tok = self.token
            entry = PRECEDENCE.get(tok.kind)
            if entry is None or tok.kind is Kind.ELSE or entry.level < min_level:
                return left
            if entry.assoc == NONASSOC and entry.level == chained:
                self.fail("non-associative operator chained:")
            self.advance()
            right_min = entry.level if entry.assoc == RIGHT else entry.level + 1
            right = self.parse_exp(right_min)
            left = _BINARY[tok.kind][1](left, right, tok.pos)
            chained = entry.level if entry.assoc == NONASSOC else None

    def parse_prefix(self, min_level: int):
        tok = self.token
        kind = tok.kind
        if kind is Kind.NUM:
            self.advance()
            return ast.IConst(tok.value, tok.pos)
        if kind is Kind.FLOAT:
            self.advance()
            return ast.FConst(tok.value, tok.pos)
        if kind is Kind.ID:
            self.advance()
            return ast.Id(tok.value, tok.pos)
        if kind is Kind.LPAR:
            self.advance()
            inner = self.parse_exp(0)
            self.expect(Kind.RPAR)
            return inner
        if kind is Kind.MINUS:
            if UMINUS_LEVEL < min_level:
                self.fail("unary minus not allowed here:")
            self.advance()
            return ast.UMinus(self.parse_exp(UMINUS_LEVEL + 1), tok.pos)
        if kind is Kind.NOT:
            if NOT_LEVEL < min_level:
                self.fail("'not' needs parentheses here:")
            self.advance()
            return ast.Not(self.parse_exp(NOT_LEVEL + 1), tok.pos)
        if kind is Kind.IF:
            # the else branch swallows every binary operator to its right
            self.advance()
            cond = self.parse_exp(0)
            self.expect(Kind.THEN)
            then = self.parse_exp(0)
            self.expect(Kind.ELSE)
            return ast.If(cond, then, self.parse_exp(ELSE_LEVEL + 1), tok.pos)
        self.fail("expected an expression, found")


def parse_program(tokens, ext: bool = False) -> ast.Pgm:
    return Parser(tokens, ext).parse_program()


def parse_expression(tokens, ext: bool = False):
    """Parse a token stream holding exactly one expression."""
    p = Parser(tokens, ext)
    e = p.parse_exp(0)
    p.expect(Kind.EOF)
    return e


def parse(source, ext: bool = False) -> ast.Pgm:
    return parse_program(scan_all(source, ext), ext)
