"""Scanner for the definitions language.

Works on bytes. At each cursor position every token rule is tried; the
longest match wins and ties go to the rule listed first, which is what
makes ``123`` an integer even though the float pattern matches it too.
"""

from __future__ import annotations

import bisect
import enum
import re
from dataclasses import dataclass, field
from typing import Union

from .errors import LexicalError
from .syntax import Pos

INT_MIN = -(2**63)
INT_MAX = 2**63 - 1


class Kind(enum.Enum):
    NUM = "NUM"
    FLOAT = "FLOAT"
    ID = "ID"
    IF = "IF"
    THEN = "THEN"
    ELSE = "ELSE"
    AND = "AND"
    OR = "OR"
    NOT = "NOT"
    EQ = "EQ"
    PLUS = "PLUS"
    MINUS = "MINUS"
    TIMES = "TIMES"
    DIVIDE = "DIVIDE"
    LPAR = "LPAR"
    RPAR = "RPAR"
    EOF = "EOF"
    WHILE = "WHILE"
    DO = "DO"
    END = "END"


KEYWORDS = {
    "if": Kind.IF,
    "then": Kind.THEN,
    "else": Kind.ELSE,
    "and": Kind.AND,
    "or": Kind.OR,
    "not": Kind.NOT,
}
EXT_KEYWORDS = {"while": Kind.WHILE, "do": Kind.DO, "end": Kind.END}

OPERATORS = {
    ord("+"): Kind.PLUS,
    ord("-"): Kind.MINUS,
    ord("*"): Kind.TIMES,
    ord("/"): Kind.DIVIDE,
    ord("("): Kind.LPAR,
    ord(")"): Kind.RPAR,
    ord("="): Kind.EQ,
}


@dataclass(frozen=True)
class Token:
    kind: Kind
    pos: Pos
    value: Union[int, float, str, None] = None

    def dump(self) -> str:
        head = f"{self.pos.line}:{self.pos.column}\t{self.kind.value}"
        if self.value is None:
            return head
        if isinstance(self.value, str):
            return f"{head}({self.value})"
        return f"{head}({format_number(self.value)})"


def format_number(x) -> str:
    text = repr(x) if isinstance(x, float) else str(x)
    return text.replace("-", "~")


def get_line_col(offset: int, line_starts, current_line: int) -> Pos:
    """Map an absolute offset to (line, column).

    ``line_starts`` holds the offset of the first character of each line,
    ascending, with ``line_starts[0] == 0``; ``current_line`` is its length.
    """
    i = bisect.bisect_right(line_starts, offset, 0, current_line) - 1
    return Pos(i + 1, offset - line_starts[i])


def classify_word(lexeme: str, pos: Pos, ext: bool = False) -> Token:
    kind = KEYWORDS.get(lexeme)
    if kind is None and ext:
        kind = EXT_KEYWORDS.get(lexeme)
    if kind is None:
        return Token(Kind.ID, pos, lexeme)
    return Token(kind, pos)


_WHITESPACE = frozenset(b" \t\r")
_NEWLINE = frozenset(b"\n\x0c")

_INT_RE = re.compile(rb"~?[0-9]+")
_FLOAT_RE = re.compile(rb"~?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+~]?[0-9]+)?")
_WORD_RE = re.compile(rb"[A-Za-z][A-Za-z0-9]*")
_COMMENT_RE = re.compile(rb"\\[^\n]*")

# priority order for tokens that carry text; operators are single bytes
_RULES = (("comment", _COMMENT_RE), ("int", _INT_RE), ("float", _FLOAT_RE), ("word", _WORD_RE))


@dataclass
class Scanner:
    source: bytes
    ext: bool = False
    cursor: int = 0
    current_line: int = 1
    line_starts: list = field(default_factory=lambda: [0])

    def __post_init__(self):
        if isinstance(self.source, str):
            self.source = self.source.encode("utf-8")

    def pos_at(self, offset: int) -> Pos:
        return get_line_col(offset, self.line_starts, self.current_line)

    def offset_of(self, pos: Pos) -> int:
        return self.line_starts[pos.line - 1] + pos.column

    def _error(self, message, start):
        raise LexicalError(message, self.pos_at(start))

    def next_token(self) -> Token:
        src = self.source
        n = len(src)
        while True:
            start = self.cursor
            if start >= n:
                return Token(Kind.EOF, self.pos_at(start))
            c = src[start]
            if c in _WHITESPACE:
                self.cursor += 1
                continue
            if c in _NEWLINE:
                self.cursor += 1
                self.current_line += 1
                self.line_starts.append(self.cursor)
                continue

            rule, length = None, 0
            for name, regex in _RULES:
                m = regex.match(src, start)
                if m and m.end() - start > length:
                    rule, length = name, m.end() - start
            if c in OPERATORS and length < 1:
                rule, length = "op", 1

            if rule is None:
                self._error("Illegal symbol in input", start)
            self.cursor = start + length
            if rule == "comment":
                continue

            pos = self.pos_at(start)
            text = src[start:self.cursor].decode("ascii").replace("~", "-")
            if rule == "op":
                return Token(OPERATORS[c], pos)
            if rule == "int":
                value = int(text)
                if not INT_MIN <= value <= INT_MAX:
                    self._error("Bad integer", start)
                return Token(Kind.NUM, pos, value)
            if rule == "float":
                value = float(text)
                if value in (float("inf"), float("-inf")):
                    self._error("Bad float", start)
                return Token(Kind.FLOAT, pos, value)
            return classify_word(text, pos, self.ext)

    def __iter__(self):
        while True:
            tok = self.next_token()
            yield tok
            if tok.kind is Kind.EOF:
                return


def scan_all(source: Union[str, bytes], ext: bool = False) -> list:
    return list(Scanner(source, ext))


def dump_tokens(tokens) -> str:
    return "\n".join(t.dump() for t in tokens)
