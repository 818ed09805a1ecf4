"""Tree-walking evaluator.

Values are dynamically typed.  Arithmetic needs two operands of the same
numeric type (no int/real coercion), ``and``/``or`` evaluate both sides
before checking them, and ``if`` only evaluates the branch it takes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from . import syntax as ast
from .errors import RunError
from .lexer import INT_MAX, INT_MIN


@dataclass(frozen=True)
class IntV:
    value: int


@dataclass(frozen=True)
class RealV:
    value: float


@dataclass(frozen=True)
class BoolV:
    value: bool


Value = Union[IntV, RealV, BoolV]


class Env:
    """Immutable binding list, newest first.

    Binding a name never drops the older entry; it is only shadowed.
    """

    __slots__ = ("_node", "_size")

    def __init__(self, bindings=()):
        node = None
        pairs = list(bindings)
        for name, value in reversed(pairs):
            node = (name, value, node)
        self._node = node
        self._size = len(pairs)

    def bind(self, name: str, value: Value) -> "Env":
        env = Env.__new__(Env)
        env._node = (name, value, self._node)
        env._size = self._size + 1
        return env

    def lookup(self, name: str) -> Optional[Value]:
        node = self._node
        while node is not None:
            if node[0] == name:
                return node[1]
            node = node[2]
        return None

    def __iter__(self):
        node = self._node
        while node is not None:
            yield node[0], node[1]
            node = node[2]

    def __len__(self):
        return self._size

    def __eq__(self, other):
        if not isinstance(other, Env):
            return NotImplemented
        return self._size == other._size and list(self) == list(other)

    __hash__ = None

    def __repr__(self):
        return f"Env({list(self)!r})"


def initial_env() -> Env:
    return Env([("pi", RealV(3.14159265359)), ("e", RealV(2.71828182846)), ("one", IntV(1))])


def lookup(name: str, env) -> Optional[Value]:
    if isinstance(env, Env):
        return env.lookup(name)
    for key, value in env:
        if key == name:
            return value
    return None


# -- formatting -----------------------------------------------------------

def format_real(x: float) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "~inf"
    text = format(x, ".12g")
    if "e" in text:
        mantissa, exp = text.split("e")
        text = f"{mantissa}E{int(exp)}"
    elif "." not in text:
        text += ".0"
    return text.replace("-", "~")


def format_value(v: Value) -> str:
    match v:
        case BoolV(value=b):
            return "true" if b else "false"
        case IntV(value=n):
            return str(n).replace("-", "~")
        case RealV(value=x):
            return format_real(x)
    raise TypeError(f"not a value: {v!r}")


# -- evaluation -----------------------------------------------------------

def _int(n: int, pos) -> IntV:
    if not INT_MIN <= n <= INT_MAX:
        raise RunError("Integer overflow", pos)
    return IntV(n)


def _real_div(m: float, n: float) -> float:
    if n != 0.0:
        return m / n
    if m == 0.0 or math.isnan(m):
        return math.nan
    return math.copysign(math.inf, m) * math.copysign(1.0, n)


_ARITH = {
    ast.Plus: ("+", lambda m, n: m + n),
    ast.Minus: ("-", lambda m, n: m - n),
    ast.Times: ("*", lambda m, n: m * n),
}


def eval_exp(e: ast.Exp, env: Env) -> Value:
    match e:
        case ast.IConst(value=n):
            return IntV(n)
        case ast.FConst(value=x):
            return RealV(x)
        case ast.Id(name=x, pos=pos):
            v = lookup(x, env)
            if v is None:
                raise RunError(f"Unknown variable {x}", pos)
            return v
        case ast.Plus() | ast.Minus() | ast.Times():
            sym, op = _ARITH[type(e)]
            match eval_exp(e.left, env), eval_exp(e.right, env):
                case IntV(value=m), IntV(value=n):
                    return _int(op(m, n), e.pos)
                case RealV(value=m), RealV(value=n):
                    return RealV(op(m, n))
            raise RunError(f"Non-number argument to {sym}", e.pos)
        case ast.Divide(pos=pos):
            match eval_exp(e.left, env), eval_exp(e.right, env):
                case IntV(value=m), IntV(value=n):
                    if n == 0:
                        raise RunError("Division by zero", pos)
                    return _int(m // n, pos)
                case RealV(value=m), RealV(value=n):
                    return RealV(_real_div(m, n))
            raise RunError("Non-number argument to /", pos)
        case ast.UMinus(operand=x, pos=pos):
            match eval_exp(x, env):
                case IntV(value=m):
                    return _int(-m, pos)
                case RealV(value=m):
                    return RealV(-m)
            raise RunError("Non-number argument to unary -", pos)
        case ast.Eq(pos=pos):
            a, b = eval_exp(e.left, env), eval_exp(e.right, env)
            if type(a) is not type(b):
                raise RunError("Non-comparable argument to =", pos)
            return BoolV(a.value == b.value)
        case ast.And() | ast.Or():
            a, b = eval_exp(e.left, env), eval_exp(e.right, env)
            if not (isinstance(a, BoolV) and isinstance(b, BoolV)):
                word = "and" if isinstance(e, ast.And) else "or"
                raise RunError(f"Non-logical argument to {word}", e.pos)
            if isinstance(e, ast.And):
                return BoolV(a.value and b.value)
            return BoolV(a.value or b.value)
        case ast.Not(operand=x, pos=pos):
            v = eval_exp(x, env)
            if not isinstance(v, BoolV):
                raise RunError("Non-logical argument to not", pos)
            return BoolV(not v.value)
        case ast.If(cond=c, then=t, orelse=f, pos=pos):
            if _truth(eval_exp(c, env), pos):
                return eval_exp(t, env)
            return eval_exp(f, env)
    raise TypeError(f"not an expression: {e!r}")


def _truth(v: Value, pos) -> bool:
    if not isinstance(v, BoolV):
        raise RunError("Non-logical argument to if", pos)
    return v.value


def eval_def(d, env: Env, sink) -> Env:
    match d:
        case ast.Bind(name=name, body=body):
            v = eval_exp(body, env)
            env = env.bind(name, v)
            sink.append(f"{name}={format_value(v)}")
            return env
        case ast.CondDef(cond=c, then=t, orelse=f, pos=pos):
            chosen = t if _truth(eval_exp(c, env), pos) else f
            return eval_def(chosen, env, sink)
        case ast.WhileDef(cond=c, body=body, pos=pos):
            while _truth(eval_exp(c, env), pos):
                for inner in body:
                    env = eval_def(inner, env, sink)
            return env
    raise TypeError(f"not a definition: {d!r}")


def eval_program(p, env: Optional[Env] = None, sink=None) -> Env:
    env = initial_env() if env is None else env
    sink = [] if sink is None else sink
    for d in p:
        env = eval_def(d, env, sink)
    return env
