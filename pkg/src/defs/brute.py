"""Brute-force grouping oracle for small expressions.

Enumerates every parse tree of the *ambiguous* expression grammar over a
tiny alphabet, then keeps the trees that satisfy the precedence contract
stated as local parent/child constraints.  It shares no code with the
parser, so agreement between the two is meaningful.

Trees are plain tuples::

    ("atom", text)
    ("paren", tree)
    ("pre", op, tree)
    ("bin", op, left, right)
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache

ATOMS = ("a", "b", "1", "2")
PREFIX = {"not": 4, "-": 8}
BINARY = {
    "or": (2, "right"),
    "and": (3, "right"),
    "=": (5, "nonassoc"),
    "+": (6, "left"),
    "-": (6, "left"),
    "*": (7, "left"),
}
ALPHABET = ATOMS + ("+", "-", "*", "=", "and", "or", "not", "(", ")")
TIGHT = 100


@lru_cache(maxsize=None)
def trees(n: int):
    """All (tokens, tree) pairs whose yield is exactly ``n`` tokens."""
    out = []
    if n == 1:
        out.extend(((a,), ("atom", a)) for a in ATOMS)
    if n >= 2:
        for op in PREFIX:
            out.extend(((op,) + y, ("pre", op, t)) for y, t in trees(n - 1))
    if n >= 3:
        out.extend((("(",) + y + (")",), ("paren", t)) for y, t in trees(n - 2))
        for i in range(1, n - 1):
            for (ly, lt), (ry, rt) in itertools.product(trees(i), trees(n - 1 - i)):
                for op in BINARY:
                    out.append((ly + (op,) + ry, ("bin", op, lt, rt)))
    return tuple(out)


def level(t) -> int:
    if t[0] == "pre":
        return PREFIX[t[1]]
    if t[0] == "bin":
        return BINARY[t[1]][0]
    return TIGHT


def admissible(t) -> bool:
    kind = t[0]
    if kind == "atom":
        return True
    if kind == "paren":
        return admissible(t[1])
    if kind == "pre":
        return level(t[2]) > PREFIX[t[1]] and admissible(t[2])
    lvl, assoc = BINARY[t[1]]
    left_min = lvl if assoc == "left" else lvl + 1
    right_min = lvl if assoc == "right" else lvl + 1
    return (
        level(t[2]) >= left_min
        and level(t[3]) >= right_min
        and admissible(t[2])
        and admissible(t[3])
    )


def unparen(t):
    kind = t[0]
    if kind == "atom":
        return t
    if kind == "paren":
        return unparen(t[1])
    if kind == "pre":
        return ("pre", t[1], unparen(t[2]))
    return ("bin", t[1], unparen(t[2]), unparen(t[3]))


def expected_groupings(max_tokens: int = 7) -> dict:
    """Map every derivable token string to its admissible trees (parens removed)."""
    table = defaultdict(list)
    for n in range(1, max_tokens + 1):
        for y, t in trees(n):
            if admissible(t):
                table[y].append(unparen(t))
            else:
                table.setdefault(y, [])
    return dict(table)


def all_strings(max_tokens: int):
    for n in range(1, max_tokens + 1):
        yield from itertools.product(ALPHABET, repeat=n)


# -- comparison against a real parser -------------------------------------

def from_ast(e):
    """Translate a parsed expression into the oracle's tuple form."""
    from . import syntax as ast

    match e:
        case ast.IConst(value=v):
            return ("atom", str(v))
        case ast.Id(name=n):
            return ("atom", n)
        case ast.UMinus(operand=x):
            return ("pre", "-", from_ast(x))
        case ast.Not(operand=x):
            return ("pre", "not", from_ast(x))
    ops = {ast.Plus: "+", ast.Minus: "-", ast.Times: "*", ast.Eq: "=", ast.And: "and", ast.Or: "or"}
    return ("bin", ops[type(e)], from_ast(e.left), from_ast(e.right))


def to_tokens(symbols):
    """Token list for a symbol string; token i sits at column i."""
    from .lexer import Kind, Token
    from .syntax import Pos

    kinds = {
        "+": Kind.PLUS, "-": Kind.MINUS, "*": Kind.TIMES, "=": Kind.EQ,
        "and": Kind.AND, "or": Kind.OR, "not": Kind.NOT, "(": Kind.LPAR, ")": Kind.RPAR,
    }
    out = []
    for i, s in enumerate(symbols):
        if s in kinds:
            out.append(Token(kinds[s], Pos(1, i)))
        elif s.isdigit():
            out.append(Token(Kind.NUM, Pos(1, i), int(s)))
        else:
            out.append(Token(Kind.ID, Pos(1, i), s))
    out.append(Token(Kind.EOF, Pos(1, len(symbols))))
    return out


def sweep(parse_expression, max_tokens: int = 7, table=None):
    """Check ``parse_expression`` against the oracle on every string up to ``max_tokens``.

    Walks the trie of symbol strings.  A parser that only ever inspects the
    current token and fails at index k < len(prefix) fails identically on
    every extension of that prefix, so such subtrees are settled without
    being enumerated.  Returns (strings_visited, mismatches).
    """
    from .errors import ParseError

    table = expected_groupings(max_tokens) if table is None else table
    mismatches = []
    visited = 0
    seen = set()
    stack = [()]
    while stack:
        prefix = stack.pop()
        try:
            got = [from_ast(parse_expression(to_tokens(prefix)))]
            err = None
        except ParseError as exc:
            got, err = [], exc.pos.column
        if prefix:
            visited += 1
            want = table.get(prefix, [])
            if want:
                seen.add(prefix)
            if got != want:
                mismatches.append((prefix, want, got))
        if err is not None and err < len(prefix):
            continue
        if len(prefix) < max_tokens:
            stack.extend(prefix + (s,) for s in ALPHABET)
    # a pruned subtree must not hide a string that should parse
    for prefix, want in table.items():
        if want and prefix not in seen:
            visited += 1
            mismatches.append((prefix, want, "never reached: parser failed on a prefix"))
    return visited, mismatches
