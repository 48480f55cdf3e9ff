"""Closed-form generating-function expressions.

Grammar (whitespace-insensitive, explicit ``*`` required)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" exponent)?
    exponent:= "-"? INT | "(" "-"? INT ")"
    atom    := INT | "x" | "(" expr ")" | ("sqrt" | "c") "(" expr ")"

``c(u)`` is the Catalan generating function (1 - sqrt(1 - 4u))/(2u).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import PrecisionError
from .series import Series


class ExprSyntaxError(SyntaxError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.text = text


class UnknownIdentifierError(ExprSyntaxError):
    pass


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str  # "sqrt" or "c"
    arg: "Node"


Node = Union[Num, Var, Neg, BinOp, Pow, Call]

FUNCTIONS = ("sqrt", "c")

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace remains
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def peek(self):
        return self.tokens[self.i]

    def error(self, message, tok=None):
        tok = tok or self.peek
        return ExprSyntaxError(message, tok[2], self.text)

    def take(self, value=None):
        tok = self.peek
        if value is not None and tok[1] != value:
            found = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise self.error(f"expected {value!r}, found {found}")
        self.i += 1
        return tok

    def parse(self) -> Node:
        node = self.expr()
        if self.peek[0] != "end":
            raise self.error(f"unexpected {self.peek[1]!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek[1] in ("+", "-") and self.peek[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek[1] in ("*", "/") and self.peek[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek == ("op", "-", self.peek[2]):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek[0] == "op" and self.peek[1] == "^":
            self.take()
            return Pow(base, self.exponent())
        return base

    def exponent(self) -> int:
        paren = self.peek[1] == "("
        if paren:
            self.take()
        sign = 1
        if self.peek[1] == "-":
            self.take()
            sign = -1
        tok = self.peek
        if tok[0] != "int":
            raise self.error("exponent must be an integer literal")
        self.take()
        if paren:
            self.take(")")
        return sign * int(tok[1])

    def atom(self) -> Node:
        kind, value, pos = tok = self.peek
        if kind == "int":
            self.take()
            return Num(int(value))
        if kind == "name":
            self.take()
            if value == "x":
                return Var()
            if value in FUNCTIONS:
                self.take("(")
                arg = self.expr()
                self.take(")")
                return Call(value, arg)
            raise UnknownIdentifierError(f"unknown identifier {value!r}", pos, self.text)
        if value == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {value!r}", tok)


def parse(text: str) -> Node:
    return _Parser(text).parse()


def to_text(node: Node) -> str:
    """Fully parenthesised rendering; ``parse(to_text(n)) == n``."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Neg):
        return f"(-{to_text(node.operand)})"
    if isinstance(node, BinOp):
        return f"({to_text(node.left)}{node.op}{to_text(node.right)})"
    if isinstance(node, Pow):
        return f"({to_text(node.base)}^({node.exponent}))"
    if isinstance(node, Call):
        return f"{node.name}({to_text(node.arg)})"
    raise TypeError(node)


def _eval(node: Node, n: int) -> Series:
    if isinstance(node, Num):
        return Series.constant(node.value, n)
    if isinstance(node, Var):
        return Series.x(n)
    if isinstance(node, Neg):
        return -_eval(node.operand, n)
    if isinstance(node, BinOp):
        a, b = _eval(node.left, n), _eval(node.right, n)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        return a / b
    if isinstance(node, Pow):
        return _eval(node.base, n) ** node.exponent
    if isinstance(node, Call):
        u = _eval(node.arg, n)
        if node.name == "sqrt":
            return u.sqrt()
        return (1 - (1 - u * 4).sqrt()) / (u * 2)
    raise TypeError(node)


def evaluate(node: Node | str, order: int) -> Series:
    """Expand an expression to a Series known exactly through ``x**order``.

    Divisions that cancel powers of x cost precision, so the expression is
    re-evaluated at increasing working orders until ``order`` is reached.
    """
    if isinstance(node, str):
        node = parse(node)
    guard = 0
    while True:
        s = _eval(node, order + guard)
        if s.order >= order:
            return s.truncate(order)
        if guard > 4 * order + 64:
            raise PrecisionError(f"could not reach order {order}")
        guard = 2 * guard + 2


def series(text: str, order: int) -> Series:
    """Shorthand: parse and evaluate in one call."""
    return evaluate(parse(text), order)
