"""Abstract syntax for the definitions language.

Every expression node carries the source position of the token that
introduced it: the operator for binary and unary nodes, the ``if``
keyword for conditionals, the literal or name itself for leaves.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import NamedTuple, Union


class Pos(NamedTuple):
    line: int  # 1-based
    column: int  # 0-based byte offset within the line

    def __str__(self):
        return f"{self.line}:{self.column}"


NOPOS = Pos(0, 0)


@dataclass(frozen=True)
class IConst:
    value: int
    pos: Pos = NOPOS


@dataclass(frozen=True, eq=False)
class FConst:
    value: float
    pos: Pos = NOPOS

    # bit-level payload comparison so that 0.0 and ~0.0 stay distinct
    def __eq__(self, other):
        if not isinstance(other, FConst):
            return NotImplemented
        return self.value.hex() == other.value.hex() and self.pos == other.pos

    def __hash__(self):
        return hash((self.value.hex(), self.pos))


@dataclass(frozen=True)
class Id:
    name: str
    pos: Pos = NOPOS


@dataclass(frozen=True)
class Plus:
    left: Exp
    right: Exp
    pos: Pos = NOPOS


@dataclass(frozen=True)
class Minus:
    left: Exp
    right: Exp
    pos: Pos = NOPOS


@dataclass(frozen=True)
class Times:
    left: Exp
    right: Exp
    pos: Pos = NOPOS


@dataclass(frozen=True)
class Divide:
    left: Exp
    right: Exp
    pos: Pos = NOPOS


@dataclass(frozen=True)
class UMinus:
    operand: Exp
    pos: Pos = NOPOS


@dataclass(frozen=True)
class Eq:
    left: Exp
    right: Exp
    pos: Pos = NOPOS


@dataclass(frozen=True)
class And:
    left: Exp
    right: Exp
    pos: Pos = NOPOS


@dataclass(frozen=True)
class Or:
    left: Exp
    right: Exp
    pos: Pos = NOPOS


@dataclass(frozen=True)
class Not:
    operand: Exp
    pos: Pos = NOPOS


@dataclass(frozen=True)
class If:
    cond: Exp
    then: Exp
    orelse: Exp
    pos: Pos = NOPOS


Exp = Union[IConst, FConst, Id, Plus, Minus, Times, Divide, UMinus, Eq, And, Or, Not, If]
BINARY = (Plus, Minus, Times, Divide, Eq, And, Or)


@dataclass(frozen=True)
class Bind:
    name: str
    body: Exp


@dataclass(frozen=True)
class CondDef:
    cond: Exp
    then: Def
    orelse: Def
    pos: Pos = NOPOS


@dataclass(frozen=True)
class WhileDef:
    cond: Exp
    body: tuple
    pos: Pos = NOPOS

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))
        if not self.body:
            raise ValueError("while body must contain at least one definition")


Def = Union[Bind, CondDef, WhileDef]


@dataclass(frozen=True)
class Pgm:
    defs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "defs", tuple(self.defs))

    def __iter__(self):
        return iter(self.defs)

    def __len__(self):
        return len(self.defs)


def position_of(e: Exp) -> Pos:
    return e.pos


def strip_positions(node):
    """Return a copy of ``node`` with every position reset to ``NOPOS``."""
    if isinstance(node, Pgm):
        return Pgm(strip_positions(d) for d in node.defs)
    if isinstance(node, (tuple, list)):
        return type(node)(strip_positions(n) for n in node)
    if not dataclasses.is_dataclass(node):
        return node
    changes = {}
    for f in dataclasses.fields(node):
        value = getattr(node, f.name)
        if f.name == "pos":
            changes["pos"] = NOPOS
        elif dataclasses.is_dataclass(value) or isinstance(value, tuple):
            changes[f.name] = strip_positions(value)
    return dataclasses.replace(node, **changes)


def same_shape(a, b) -> bool:
    """Structural equality that ignores source positions."""
    return strip_positions(a) == strip_positions(b)


# -- textual dump ---------------------------------------------------------

_OPS = {Plus: "+", Minus: "-", Times: "*", Divide: "/", Eq: "=", And: "and", Or: "or"}


def sml_number(x) -> str:
    """Render an int or float with ``~`` as the minus sign."""
    if isinstance(x, float):
        text = repr(x)
    else:
        text = str(x)
    return text.replace("-", "~")


def exp_to_text(e: Exp) -> str:
    match e:
        case IConst(value=v):
            return f"(int {sml_number(v)})"
        case FConst(value=v):
            return f"(float {sml_number(v)})"
        case Id(name=n):
            return f"(id {n})"
        case UMinus(operand=x):
            return f"(- {exp_to_text(x)})"
        case Not(operand=x):
            return f"(not {exp_to_text(x)})"
        case If(cond=c, then=t, orelse=f):
            return f"(if {exp_to_text(c)} {exp_to_text(t)} {exp_to_text(f)})"
        case Plus() | Minus() | Times() | Divide() | Eq() | And() | Or():
            return f"({_OPS[type(e)]} {exp_to_text(e.left)} {exp_to_text(e.right)})"
    raise TypeError(f"not an expression: {e!r}")


def def_to_text(d: Def) -> str:
    match d:
        case Bind(name=n, body=b):
            return f"(def {n} {exp_to_text(b)})"
        case CondDef(cond=c, then=t, orelse=f):
            return f"(if {exp_to_text(c)} {def_to_text(t)} {def_to_text(f)})"
        case WhileDef(cond=c, body=body):
            inner = " ".join(def_to_text(x) for x in body)
            return f"(while {exp_to_text(c)} {inner})"
    raise TypeError(f"not a definition: {d!r}")


def ast_to_text(p: Pgm) -> str:
    return "\n".join(def_to_text(d) for d in p.defs)
