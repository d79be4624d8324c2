"""Expression parsing and evaluation with exact first and second derivatives.

Grammar (whitespace ignored):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := unary ('^' factor)?          # '^' is right-associative
    unary  := '-' unary | atom
    atom   := number | 'x' | func '(' expr ')' | '(' expr ')'
    func   := 'sin' | 'cos' | 'exp' | 'ln' | 'sqrt' | 'abs'
    number := decimal literal, optional fraction and exponent part

Unary minus binds tighter than '^', so "-x^2" parses as (-x)^2. There are
no named constants; write the literal (e.g. 3.141592653589793) or exp(1).

Derivatives come from second-order forward propagation (Taylor jets), not
finite differences; points where the expression is not twice differentiable
(abs at 0, fractional powers of a zero base) raise NonSmoothError instead of
returning a silently wrong value.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

__all__ = [
    "Const",
    "Var",
    "Neg",
    "Bin",
    "Pow",
    "Call",
    "Node",
    "Jet2",
    "ExpressionError",
    "ParseError",
    "DomainError",
    "NonSmoothError",
    "parse",
    "to_text",
    "evaluate",
    "evaluate_jet2",
]

FUNCTIONS = ("sin", "cos", "exp", "ln", "sqrt", "abs")


class ExpressionError(Exception):
    pass


class ParseError(ExpressionError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class DomainError(ExpressionError):
    """Evaluation outside the natural domain (ln/sqrt of negatives, zero division, bad powers)."""


class NonSmoothError(DomainError):
    """Point where the expression is not twice differentiable."""


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Bin:
    op: str  # one of + - * /
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Const, Var, Neg, Bin, Pow, Call]


@dataclass(frozen=True)
class Jet2:
    """Value and first two derivatives of an expression at a point."""

    v: float
    d1: float
    d2: float


_NUMBER = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        text, n = self.text, len(self.text)
        while self.pos < n and text[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> Node:
        node = self.term()
        while True:
            self.skip_ws()
            c = self.peek()
            if c == "+" or c == "-":
                self.pos += 1
                node = Bin(c, node, self.term())
            else:
                return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            self.skip_ws()
            c = self.peek()
            if c == "*" or c == "/":
                self.pos += 1
                node = Bin(c, node, self.factor())
            else:
                return node

    def factor(self) -> Node:
        node = self.unary()
        self.skip_ws()
        if self.peek() == "^":
            self.pos += 1
            node = Pow(node, self.factor())
        return node

    def unary(self) -> Node:
        self.skip_ws()
        if self.peek() == "-":
            self.pos += 1
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Node:
        self.skip_ws()
        c = self.peek()
        if c == "(":
            self.pos += 1
            node = self.expr()
            self.skip_ws()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return node
        if c.isdigit() or c == ".":
            return self.number()
        if c.isalpha() or c == "_":
            return self.identifier()
        if c == "":
            raise ParseError("unexpected end of input", self.pos)
        raise ParseError(f"unexpected {c!r}", self.pos)

    def number(self) -> Node:
        m = _NUMBER.match(self.text, self.pos)
        if m is None:
            raise ParseError("malformed number", self.pos)
        value = float(m.group())
        if not math.isfinite(value):
            raise ParseError("number literal out of range", self.pos)
        self.pos = m.end()
        return Const(value)

    def identifier(self) -> Node:
        start = self.pos
        m = _IDENT.match(self.text, start)
        name = m.group()
        self.pos = m.end()
        if name == "x":
            return Var()
        if name not in FUNCTIONS:
            raise ParseError(f"unknown identifier {name!r}", start)
        self.skip_ws()
        if self.peek() != "(":
            raise ParseError(f"expected '(' after {name!r}", self.pos)
        self.pos += 1
        arg = self.expr()
        self.skip_ws()
        if self.peek() != ")":
            raise ParseError("expected ')'", self.pos)
        self.pos += 1
        return Call(name, arg)


def parse(text: str) -> Node:
    """Parse expression text into an AST; ParseError carries the character offset."""
    p = _Parser(text)
    p.skip_ws()
    if p.peek() == "":
        raise ParseError("empty expression", 0)
    node = p.expr()
    p.skip_ws()
    if p.peek() != "":
        raise ParseError(f"unexpected {p.peek()!r}", p.pos)
    return node


def to_text(node: Node) -> str:
    """Render an AST as text that re-parses to a structurally identical tree."""
    if isinstance(node, Const):
        return repr(node.value)
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Neg):
        return f"(-{to_text(node.arg)})"
    if isinstance(node, Bin):
        return f"({to_text(node.left)}{node.op}{to_text(node.right)})"
    if isinstance(node, Pow):
        return f"({to_text(node.base)}^{to_text(node.exponent)})"
    if isinstance(node, Call):
        return f"{node.func}({to_text(node.arg)})"
    raise TypeError(f"not an expression node: {node!r}")


def _contains_var(node: Node) -> bool:
    if isinstance(node, Var):
        return True
    if isinstance(node, Const):
        return False
    if isinstance(node, Neg):
        return _contains_var(node.arg)
    if isinstance(node, Bin):
        return _contains_var(node.left) or _contains_var(node.right)
    if isinstance(node, Pow):
        return _contains_var(node.base) or _contains_var(node.exponent)
    return _contains_var(node.arg)


def evaluate(node: Node, x: float) -> float:
    """Evaluate node at x; raises DomainError outside the natural domain."""
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        return x
    if isinstance(node, Neg):
        return -evaluate(node.arg, x)
    if isinstance(node, Bin):
        a = evaluate(node.left, x)
        b = evaluate(node.right, x)
        op = node.op
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            return a * b
        if b == 0.0:
            raise DomainError(f"division by zero at x={x!r}")
        return a / b
    if isinstance(node, Pow):
        return _eval_pow(node, x)
    if isinstance(node, Call):
        return _eval_call(node.func, evaluate(node.arg, x))
    raise TypeError(f"not an expression node: {node!r}")


def _eval_call(name: str, u: float) -> float:
    if name == "sin":
        return math.sin(u)
    if name == "cos":
        return math.cos(u)
    if name == "exp":
        try:
            return math.exp(u)
        except OverflowError:
            raise DomainError(f"exp overflow at argument {u!r}") from None
    if name == "ln":
        if u <= 0.0:
            raise DomainError(f"ln of non-positive value {u!r}")
        return math.log(u)
    if name == "sqrt":
        if u < 0.0:
            raise DomainError(f"sqrt of negative value {u!r}")
        return math.sqrt(u)
    return abs(u)


def _eval_pow(node: Pow, x: float) -> float:
    base = evaluate(node.base, x)
    if _contains_var(node.exponent):
        if base <= 0.0:
            raise DomainError("power with variable exponent requires a positive base")
        expo = evaluate(node.exponent, x)
        try:
            return math.exp(expo * math.log(base))
        except OverflowError:
            raise DomainError("power overflow") from None
    c = evaluate(node.exponent, x)
    if c.is_integer():
        if base == 0.0 and c < 0.0:
            raise DomainError("zero base with negative exponent")
    else:
        if base < 0.0:
            raise DomainError("negative base with non-integer exponent")
        if base == 0.0 and c < 0.0:
            raise DomainError("zero base with negative exponent")
    try:
        return base**c
    except OverflowError:
        raise DomainError("power overflow") from None


def evaluate_jet2(node: Node, x: float) -> Jet2:
    """Exact (f, f', f'') at x via second-order forward propagation."""
    return Jet2(*_jet(node, x))


def _jet(node: Node, x: float) -> tuple[float, float, float]:
    if isinstance(node, Const):
        return (node.value, 0.0, 0.0)
    if isinstance(node, Var):
        return (x, 1.0, 0.0)
    if isinstance(node, Neg):
        v, d1, d2 = _jet(node.arg, x)
        return (-v, -d1, -d2)
    if isinstance(node, Bin):
        av, a1, a2 = _jet(node.left, x)
        bv, b1, b2 = _jet(node.right, x)
        op = node.op
        if op == "+":
            return (av + bv, a1 + b1, a2 + b2)
        if op == "-":
            return (av - bv, a1 - b1, a2 - b2)
        if op == "*":
            return (av * bv, a1 * bv + av * b1, a2 * bv + 2.0 * a1 * b1 + av * b2)
        if bv == 0.0:
            raise DomainError(f"division by zero at x={x!r}")
        w = av / bv
        w1 = (a1 - w * b1) / bv
        w2 = (a2 - 2.0 * w1 * b1 - w * b2) / bv
        return (w, w1, w2)
    if isinstance(node, Pow):
        return _jet_pow(node, x)
    if isinstance(node, Call):
        return _jet_call(node.func, _jet(node.arg, x))
    raise TypeError(f"not an expression node: {node!r}")


def _jet_call(name: str, u: tuple[float, float, float]) -> tuple[float, float, float]:
    uv, u1, u2 = u
    if name == "sin":
        s = math.sin(uv)
        c = math.cos(uv)
        return (s, c * u1, -s * u1 * u1 + c * u2)
    if name == "cos":
        s = math.sin(uv)
        c = math.cos(uv)
        return (c, -s * u1, -c * u1 * u1 - s * u2)
    if name == "exp":
        try:
            w = math.exp(uv)
        except OverflowError:
            raise DomainError(f"exp overflow at argument {uv!r}") from None
        return (w, w * u1, w * (u1 * u1 + u2))
    if name == "ln":
        if uv <= 0.0:
            raise DomainError(f"ln of non-positive value {uv!r}")
        w1 = u1 / uv
        return (math.log(uv), w1, u2 / uv - w1 * w1)
    if name == "sqrt":
        if uv < 0.0:
            raise DomainError(f"sqrt of negative value {uv!r}")
        if uv == 0.0:
            raise NonSmoothError("sqrt is not differentiable at 0")
        w = math.sqrt(uv)
        w1 = 0.5 * u1 / w
        return (w, w1, (0.5 * u2 - w1 * w1) / w)
    # abs
    if uv == 0.0:
        raise NonSmoothError("abs is not differentiable where its argument is 0")
    s = 1.0 if uv > 0.0 else -1.0
    return (abs(uv), s * u1, s * u2)


def _jet_pow(node: Pow, x: float) -> tuple[float, float, float]:
    bv, b1, b2 = _jet(node.base, x)
    if _contains_var(node.exponent):
        if bv <= 0.0:
            raise DomainError("power with variable exponent requires a positive base")
        ev, e1, e2 = _jet(node.exponent, x)
        # w = exp(e * ln b)
        lv = math.log(bv)
        l1 = b1 / bv
        l2 = b2 / bv - l1 * l1
        pv = ev * lv
        p1 = e1 * lv + ev * l1
        p2 = e2 * lv + 2.0 * e1 * l1 + ev * l2
        try:
            w = math.exp(pv)
        except OverflowError:
            raise DomainError("power overflow") from None
        return (w, w * p1, w * (p1 * p1 + p2))
    c = evaluate(node.exponent, x)
    if c.is_integer():
        if bv == 0.0 and c < 0.0:
            raise DomainError("zero base with negative exponent")
    else:
        if bv < 0.0:
            raise DomainError("negative base with non-integer exponent")
        if bv == 0.0:
            if c < 0.0:
                raise DomainError("zero base with negative exponent")
            if c < 2.0:
                raise NonSmoothError(
                    "power of zero base with exponent in (0, 2) is not twice differentiable"
                )
    try:
        v = bv**c
        d1 = 0.0
        d2 = 0.0
        if c != 0.0:
            t1 = c * bv ** (c - 1.0)
            d1 = t1 * b1
            d2 = t1 * b2
            c2 = c * (c - 1.0)
            if c2 != 0.0:
                d2 += c2 * bv ** (c - 2.0) * b1 * b1
    except OverflowError:
        raise DomainError("power overflow") from None
    return (v, d1, d2)
