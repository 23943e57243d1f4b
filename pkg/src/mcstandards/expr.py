"""Arithmetic expressions for objectives and constraint left-hand sides.

Grammar (whitespace is insignificant)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' ['-'] INTEGER)*
    atom    := NUMBER | NAME | '(' expr ')'
    NUMBER  := DIGITS ['.' DIGITS?] [('e'|'E') ['+'|'-'] DIGITS] | '.' DIGITS [...]
    NAME    := [A-Za-z_][A-Za-z0-9_]*

Power binds tighter than unary minus, so ``-y^2`` is ``-(y^2)``.  Exponents
are integer literals and are evaluated by repeated multiplication.

Evaluation works on plain floats and, elementwise, on numpy arrays; both
paths perform the same IEEE operations in the same order, so a grid scan
and a pointwise re-evaluation agree bit for bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import DivisionByZeroError, MissingVariableError, ParseError

__all__ = [
    "Expr", "Const", "Var", "Neg", "BinOp", "Pow",
    "parse", "evaluate", "free_variables", "to_source",
]


class Expr:
    """Base node.  Nodes are immutable and hashable."""

    __slots__ = ()

    def evaluate(self, point):
        return evaluate(self, point)

    @property
    def free_variables(self):
        return free_variables(self)

    def __str__(self):
        return to_source(self)


@dataclass(frozen=True)
class Const(Expr):
    value: float


@dataclass(frozen=True)
class Var(Expr):
    name: str


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class BinOp(Expr):
    op: str  # one of + - * /
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


def _tokenize(source):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unknown token {source[pos]!r}", pos, source)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source):
        self.source = source
        self.tokens = _tokenize(source)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, message=None):
        kind, text, pos = self.tok
        if message is None:
            message = "unexpected end of input" if kind == "end" else f"unexpected {text!r}"
        raise ParseError(message, pos, self.source)

    def accept(self, text):
        if self.tok[0] == "op" and self.tok[1] == text:
            self.i += 1
            return True
        return False

    def parse(self):
        node = self.expr()
        if self.tok[0] != "end":
            self.error()
        return node

    def expr(self):
        node = self.term()
        while self.tok[0] == "op" and self.tok[1] in "+-":
            op = self.tok[1]
            self.i += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.tok[0] == "op" and self.tok[1] in "*/":
            op = self.tok[1]
            self.i += 1
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        while self.accept("^"):
            sign = -1 if self.accept("-") else 1
            kind, text, _ = self.tok
            if kind != "number" or not text.isdigit():
                self.error("exponent must be an integer literal")
            self.i += 1
            node = Pow(node, sign * int(text))
        return node

    def atom(self):
        kind, text, _ = self.tok
        if kind == "number":
            self.i += 1
            return Const(float(text))
        if kind == "name":
            self.i += 1
            return Var(text)
        if self.accept("("):
            node = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return node
        self.error()


def parse(source: str) -> Expr:
    """Parse expression text into an immutable tree.

    Raises ParseError carrying the 0-based offset of the offending token.
    """
    if not source or not source.strip():
        raise ParseError("empty expression", 0, source)
    return _Parser(source).parse()


def _is_zero(x):
    if isinstance(x, np.ndarray):
        return bool(np.any(x == 0))
    return x == 0


def _power(base, n):
    if n == 0:
        return np.ones_like(base, dtype=float) if isinstance(base, np.ndarray) else 1.0
    acc = base
    for _ in range(abs(n) - 1):
        acc = acc * base
    if n < 0:
        if _is_zero(acc):
            raise DivisionByZeroError()
        acc = 1.0 / acc
    return acc


def _eval(node, point):
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        try:
            return point[node.name]
        except KeyError:
            raise MissingVariableError(node.name) from None
    if isinstance(node, Neg):
        return -_eval(node.operand, point)
    if isinstance(node, BinOp):
        a = _eval(node.left, point)
        b = _eval(node.right, point)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if _is_zero(b):
            raise DivisionByZeroError(to_source(node))
        return a / b
    if isinstance(node, Pow):
        return _power(_eval(node.base, point), node.exponent)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(e: Expr, point: Mapping[str, float]):
    """Evaluate ``e`` at ``point``.

    Scalar inputs give a float.  If any referenced variable is bound to a
    numpy array the result is an array of the broadcast shape (a constant
    subtree stays scalar; callers broadcast as needed).
    """
    with np.errstate(all="ignore"):
        value = _eval(e, point)
    if isinstance(value, np.ndarray):
        return value
    return float(value)


def free_variables(e: Expr) -> frozenset:
    if isinstance(e, Var):
        return frozenset((e.name,))
    if isinstance(e, Const):
        return frozenset()
    if isinstance(e, Neg):
        return free_variables(e.operand)
    if isinstance(e, Pow):
        return free_variables(e.base)
    return free_variables(e.left) | free_variables(e.right)


def to_source(e: Expr) -> str:
    """Render ``e`` as text that parses back to an identical tree.

    Binary operations are always parenthesized, so no precedence reasoning
    is needed on the way back in.
    """
    if isinstance(e, Const):
        value = float(e.value)
        if not np.isfinite(value):
            raise ValueError(f"constant {value} has no source form")
        # a negative constant reparses as negation, which evaluates identically
        return f"(-{-value!r})" if str(value).startswith("-") else repr(value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return f"-{_atom_source(e.operand)}"
    if isinstance(e, Pow):
        return f"{_atom_source(e.base)}^{e.exponent}"
    return f"({to_source(e.left)} {e.op} {to_source(e.right)})"


def _atom_source(e):
    text = to_source(e)
    if isinstance(e, (Const, Var, BinOp)):
        return text
    return f"({text})"
