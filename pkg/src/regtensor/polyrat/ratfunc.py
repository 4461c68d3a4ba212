"""Rational functions num/den with gcd(num, den) = 1 and monic (grlex) denominator."""

from __future__ import annotations

from typing import Optional, Sequence

from ..exactscalar import DivisionByZero
from .multipoly import MultiPoly, multi_gcd


class RatFunc:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None, *, normalized: bool = False):
        if den is None:
            den = MultiPoly.const(num.dom, num.vars, num.dom.one)
            normalized = True
        num._check(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if not normalized:
            if num.is_zero():
                den = MultiPoly.const(num.dom, num.vars, num.dom.one)
            elif not den.is_constant():
                g = multi_gcd(num, den)
                if not g.is_one():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.leading_coeff()
            if not num.dom.is_one(lc):
                inv = num.dom.inv(lc)
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @property
    def dom(self):
        return self.num.dom

    @property
    def vars(self):
        return self.num.vars

    @classmethod
    def const(cls, dom, variables, c) -> RatFunc:
        return cls(MultiPoly.const(dom, variables, c))

    @classmethod
    def var(cls, dom, variables, name) -> RatFunc:
        return cls(MultiPoly.var(dom, variables, name))

    def _coerce(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        return RatFunc.const(self.dom, self.vars, other)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            if self.den.is_one():
                return RatFunc(self.num + o.num, self.den, normalized=True)
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num, self.den, normalized=True)
        if o.is_zero() or self.is_zero():
            return RatFunc(MultiPoly.zero(self.dom, self.vars))
        # cross-cancel before multiplying keeps intermediate sizes down
        g1 = multi_gcd(self.num, o.den)
        g2 = multi_gcd(o.num, self.den)
        n = self.num.exact_div(g1) * o.num.exact_div(g2)
        d = self.den.exact_div(g2) * o.den.exact_div(g1)
        lc = d.leading_coeff()
        if not self.dom.is_one(lc):
            inv = self.dom.inv(lc)
            n, d = n.scale(inv), d.scale(inv)
        return RatFunc(n, d, normalized=True)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> RatFunc:
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n, normalized=True)

    def frobenius(self, q: int) -> RatFunc:
        return RatFunc(self.num.frobenius(q), self.den.frobenius(q), normalized=True)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        try:
            return self == self._coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def substitute(self, mapping: dict) -> RatFunc:
        """Substitute variables with RatFuncs in the same variable set."""
        num = _subst_rf(self.num, mapping)
        den = _subst_rf(self.den, mapping)
        return num / den

    def occurring_vars(self) -> set[str]:
        return {self.vars[i] for i in self.num.occurring() | self.den.occurring()}

    def extend_vars(self, variables: Sequence[str]) -> RatFunc:
        return RatFunc(self.num.extend_vars(variables), self.den.extend_vars(variables), normalized=True)

    def restrict_vars(self, variables: Sequence[str]) -> RatFunc:
        return RatFunc(self.num.restrict_vars(variables), self.den.restrict_vars(variables), normalized=True)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        n, d = str(self.num), str(self.den)
        if len(self.num.terms) > 1:
            n = f"({n})"
        if len(self.den.terms) > 1 or not self.den.is_monomial() or ("*" in d):
            d = f"({d})"
        return f"{n}/{d}"


def _subst_rf(f: MultiPoly, mapping: dict) -> RatFunc:
    idx = {f.vars.index(k): v for k, v in mapping.items()}
    acc = RatFunc(MultiPoly.zero(f.dom, f.vars))
    for e, c in f.terms.items():
        keep = tuple(0 if j in idx else a for j, a in enumerate(e))
        term = RatFunc(MultiPoly(f.dom, f.vars, {keep: c}, clean=False))
        for j, a in enumerate(e):
            if j in idx and a:
                term = term * (idx[j] ** a)
        acc = acc + term
    return acc


def pth_power_test(h: RatFunc) -> Optional[RatFunc]:
    """Return r with r**p == h when h is a p-th power in F_p(x_1..x_n), else None."""
    p = h.dom.characteristic
    if p == 0:
        raise ValueError("p-th power test needs positive characteristic")
    if getattr(h.dom, "p", None) is None:
        raise ValueError("p-th power test implemented for prime-field coefficients only")
    terms = []
    for f in (h.num, h.den):
        for e in f.terms:
            if any(a % p for a in e):
                return None
        terms.append({tuple(a // p for a in e): c for e, c in f.terms.items()})
    num = MultiPoly(h.dom, h.vars, terms[0], clean=False)
    den = MultiPoly(h.dom, h.vars, terms[1], clean=False)
    return RatFunc(num, den, normalized=True)


class RatFuncField:
    """Field object for F(vars) so polynomials may carry RatFunc coefficients."""

    def __init__(self, dom, variables: Sequence[str]):
        self.base = dom
        self.vars = tuple(variables)
        self.characteristic = dom.characteristic
        self.order = None
        self.zero = RatFunc.const(dom, self.vars, dom.zero)
        self.one = RatFunc.const(dom, self.vars, dom.one)

    def __repr__(self):
        return f"{self.base!r}({', '.join(self.vars)})"

    def __eq__(self, other):
        return isinstance(other, RatFuncField) and other.base == self.base and other.vars == self.vars

    def __hash__(self):
        return hash(("RF", self.base, self.vars))

    def convert(self, a) -> RatFunc:
        if isinstance(a, RatFunc):
            if a.vars != self.vars:
                raise ValueError(f"variables {a.vars} vs {self.vars}")
            return a
        if isinstance(a, MultiPoly):
            return RatFunc(a)
        return RatFunc.const(self.base, self.vars, a)

    def var(self, name: str) -> RatFunc:
        return RatFunc.var(self.base, self.vars, name)

    def from_int(self, n: int) -> RatFunc:
        return RatFunc.const(self.base, self.vars, self.base.from_int(n))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return a.inverse()

    def div(self, a, b):
        return a / b

    def pow(self, a, n):
        return a**n

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def is_one(self, a) -> bool:
        return a.num.is_one() and a.den.is_one()

    def eq(self, a, b) -> bool:
        return a == b

    def key(self, a):
        return str(a)

    def to_str(self, a) -> str:
        return str(a)

    def is_negative_literal(self, a) -> bool:
        # a negative constant such as -2 prints as a subtraction
        if a.num.is_zero() or not a.num.is_constant() or not a.den.is_one():
            return False
        return a.num.dom.is_negative_literal(a.num.constant_coeff())
