"""ASCII expression grammar for polynomials and rational functions.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

Expressions parse to small tuples and are evaluated against an *algebra*
object supplying ``const``, ``name``, ``add``, ``sub``, ``mul``, ``div``,
``neg`` and ``pow``.  Examples: ``x^2*y + 3``, ``(x^2+y^2)/y^2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(.))")


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1):
            out.append(Token("int", m.group(1), m.start(1) + 1))
        elif m.group(2):
            out.append(Token("name", m.group(2), m.start(2) + 1))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", m.start(3) + 1)
            out.append(Token("op", ch, m.start(3) + 1))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str):
        t = self.take()
        if t.text != text:
            raise ExprSyntaxError(f"expected {text!r}, got {t.text or 'end of input'!r}", t.col)

    def parse(self):
        node = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ExprSyntaxError(f"unexpected {t.text!r}", t.col)
        return node

    def expr(self):
        node = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.take().text
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek().text in ("*", "/") and self.peek().kind == "op":
            op = self.take().text
            rhs = self.unary()
            node = ("mul" if op == "*" else "div", node, rhs)
        return node

    def unary(self):
        if self.peek().kind == "op" and self.peek().text == "-":
            self.take()
            return ("neg", self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            t = self.peek()
            if t.kind == "op" and t.text == "(":
                self.take()
                n = self.take()
                if n.kind != "int":
                    raise ExprSyntaxError("exponent must be a nonnegative integer", n.col)
                self.expect(")")
            else:
                n = self.take()
                if n.kind != "int":
                    raise ExprSyntaxError("exponent must be a nonnegative integer", n.col)
            node = ("pow", node, int(n.text))
        return node

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return ("num", int(t.text))
        if t.kind == "name":
            return ("name", t.text)
        if t.kind == "op" and t.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExprSyntaxError(f"unexpected {t.text or 'end of input'!r}", t.col)


def parse_expr(text: str):
    return _Parser(text).parse()


def names_in(node) -> set[str]:
    kind = node[0]
    if kind == "name":
        return {node[1]}
    if kind == "num":
        return set()
    if kind in ("neg",):
        return names_in(node[1])
    if kind == "pow":
        return names_in(node[1])
    return names_in(node[1]) | names_in(node[2])


def evaluate(node, algebra):
    kind = node[0]
    if kind == "num":
        return algebra.const(node[1])
    if kind == "name":
        return algebra.name(node[1])
    if kind == "neg":
        return algebra.neg(evaluate(node[1], algebra))
    if kind == "pow":
        return algebra.pow(evaluate(node[1], algebra), node[2])
    a = evaluate(node[1], algebra)
    b = evaluate(node[2], algebra)
    return getattr(algebra, kind)(a, b)


_PREC = {"add": 1, "sub": 1, "mul": 2, "div": 2, "neg": 3, "pow": 4, "num": 5, "name": 5}


def to_source(node) -> str:
    """Canonical minimal-parenthesis rendering; parse(to_source(n)) == n."""
    kind = node[0]
    if kind == "num":
        return str(node[1])
    if kind == "name":
        return node[1]
    if kind == "neg":
        inner = to_source(node[1])
        if _PREC[node[1][0]] < 3:
            inner = f"({inner})"
        return f"-{inner}"
    if kind == "pow":
        inner = to_source(node[1])
        if _PREC[node[1][0]] < 5:
            inner = f"({inner})"
        return f"{inner}^{node[2]}"
    p = _PREC[kind]
    left = to_source(node[1])
    if _PREC[node[1][0]] < p:
        left = f"({left})"
    right = to_source(node[2])
    # left-associative: the right operand needs parentheses at equal precedence
    if _PREC[node[2][0]] <= p:
        right = f"({right})"
    sym = {"add": " + ", "sub": " - ", "mul": "*", "div": "/"}[kind]
    return f"{left}{sym}{right}"


class PolyAlgebra:
    """Evaluate expressions into RatFuncs over ``dom`` in ``variables``."""

    def __init__(self, dom, variables, aliases: dict | None = None):
        from .ratfunc import RatFunc

        self.dom = dom
        self.vars = tuple(variables)
        self.aliases = aliases or {}
        self._RF = RatFunc

    def const(self, n):
        return self._RF.const(self.dom, self.vars, self.dom.from_int(n))

    def name(self, s):
        if s in self.aliases:
            return self.aliases[s]
        if s not in self.vars:
            raise KeyError(s)
        return self._RF.var(self.dom, self.vars, s)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def pow(self, a, n):
        return a**n


def parse_ratfunc(text: str, dom, variables, aliases=None):
    return evaluate(parse_expr(text), PolyAlgebra(dom, variables, aliases))


def parse_poly(text: str, dom, variables):
    rf = parse_ratfunc(text, dom, variables)
    if not rf.is_polynomial():
        raise ValueError(f"{text!r} is not a polynomial")
    return rf.num
