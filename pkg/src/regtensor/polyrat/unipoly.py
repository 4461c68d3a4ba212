"""Dense univariate polynomials over any field object.

The coefficient field is a domain object (``QQ``, ``GF(p)``, ``RatFuncField``,
a tower field, ...).  Coefficients are stored low degree first with a nonzero
leading coefficient; the zero polynomial has no coefficients and reports the
``Degree.NEG_INF`` sentinel as its degree.
"""

from __future__ import annotations

import enum
from typing import Sequence

from .multipoly import InexactDivision


class Degree(enum.Enum):
    NEG_INF = "-inf"


class BothZero(ValueError):
    pass


class ConstantInput(ValueError):
    pass


class UniPoly:
    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs: Sequence, var: str = "X"):
        self.field = field
        cs = list(coeffs)
        z = field.is_zero
        while cs and z(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def x(cls, field, var="X") -> UniPoly:
        return cls(field, [field.zero, field.one], var)

    @classmethod
    def const(cls, field, c, var="X") -> UniPoly:
        return cls(field, [field.convert(c)], var)

    @classmethod
    def monomial(cls, field, n: int, c=None, var="X") -> UniPoly:
        c = field.one if c is None else c
        return cls(field, [field.zero] * n + [c], var)

    def _new(self, coeffs) -> UniPoly:
        return UniPoly(self.field, coeffs, self.var)

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        return UniPoly.const(self.field, other, self.var)

    # -- structure ---------------------------------------------------
    @property
    def degree(self):
        if not self.coeffs:
            return Degree.NEG_INF
        return len(self.coeffs) - 1

    def _deg(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading_coeff(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if self.field.is_one(lc):
            return self
        inv = self.field.inv(lc)
        mul = self.field.mul
        return self._new([mul(c, inv) for c in self.coeffs])

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.field.is_one(self.coeffs[-1])

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        F = self.field
        n = max(len(self.coeffs), len(o.coeffs))
        return self._new([F.add(self.coeff(i), o.coeff(i)) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        F = self.field
        n = max(len(self.coeffs), len(o.coeffs))
        return self._new([F.sub(self.coeff(i), o.coeff(i)) for i in range(n)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return self._new([])
        F = self.field
        out = [F.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        z = F.is_zero
        for i, a in enumerate(self.coeffs):
            if z(a):
                continue
            for j, b in enumerate(o.coeffs):
                if z(b):
                    continue
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return self._new(out)

    __rmul__ = __mul__

    def scale(self, c) -> UniPoly:
        return self._new([self.field.mul(a, c) for a in self.coeffs])

    def __pow__(self, n: int) -> UniPoly:
        result = UniPoly.const(self.field, self.field.one, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, other: UniPoly):
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        db = other._deg()
        inv = F.inv(other.coeffs[-1])
        quo = [F.zero] * max(0, len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if F.is_zero(c):
                continue
            q = F.mul(c, inv)
            quo[k - db] = q
            for j, b in enumerate(other.coeffs):
                rem[k - db + j] = F.sub(rem[k - db + j], F.mul(q, b))
        return self._new(quo), self._new(rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InexactDivision("nonzero remainder")
        return q

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return self == self._coerce(other)

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> UniPoly:
        F = self.field
        return self._new([F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x, field=None):
        """Horner evaluation; ``field`` lets x live in an extension of the coefficient field."""
        F = field or self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c if F is self.field else F.convert(c))
        return acc

    def compose(self, g: UniPoly) -> UniPoly:
        acc = UniPoly(self.field, [], self.var)
        for c in reversed(self.coeffs):
            acc = acc * g + UniPoly(self.field, [c], self.var)
        return acc

    def inflate(self, q: int) -> UniPoly:
        """Return f(X**q)."""
        F = self.field
        out = [F.zero] * (q * self._deg() + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[q * i] = c
        return self._new(out)

    def map_coeffs(self, fn, field) -> UniPoly:
        return UniPoly(field, [fn(c) for c in self.coeffs], self.var)

    def pow_mod(self, n: int, mod: UniPoly) -> UniPoly:
        result = UniPoly.const(self.field, self.field.one, self.var)
        base = self % mod
        while n:
            if n & 1:
                result = (result * base) % mod
            n >>= 1
            if n:
                base = (base * base) % mod
        return result

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        return format_unipoly(self)


def format_unipoly(f: UniPoly) -> str:
    if not f.coeffs:
        return "0"
    F = f.field
    out = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if F.is_zero(c):
            continue
        mono = "" if i == 0 else (f.var if i == 1 else f"{f.var}^{i}")
        neg = F.is_negative_literal(c) if hasattr(F, "is_negative_literal") else False
        if neg:
            c = F.neg(c)
        cs = F.to_str(c)
        if mono and any(ch in cs for ch in "+- ") and not (cs.startswith("(") and cs.endswith(")")):
            cs = f"({cs})"
        if not mono:
            term = cs
        elif F.is_one(c):
            term = mono
        else:
            term = f"{cs}*{mono}"
        if not out:
            out.append(f"-{term}" if neg else term)
        else:
            out.append(f" - {term}" if neg else f" + {term}")
    return "".join(out)


def uni_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean remainder sequence."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def uni_xgcd(f: UniPoly, g: UniPoly):
    """Return (d, s, t) with s*f + t*g = d monic."""
    F = f.field
    one = UniPoly.const(F, F.one, f.var)
    zero = UniPoly(F, [], f.var)
    r0, r1, s0, s1, t0, t1 = f, g, one, zero, zero, one
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    inv = F.inv(r0.leading_coeff())
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def separability_split(f: UniPoly):
    """Write f = g(X**(p**e)) with e maximal; returns (g, e).

    For irreducible f the returned g is separable.
    """
    if f.is_constant():
        raise ConstantInput("separability split of a constant")
    p = f.field.characteristic
    if p == 0:
        return f, 0
    e = 0
    g = f
    while all(i % p == 0 for i, c in enumerate(g.coeffs) if not f.field.is_zero(c)):
        g = g._new([g.coeffs[i] for i in range(0, len(g.coeffs), p)])
        e += 1
    return g, e


def is_separable(f: UniPoly) -> bool:
    d = f.derivative()
    if d.is_zero():
        return False
    return uni_gcd(f, d).is_constant()


def binomial_data(f: UniPoly):
    """If f = X**(p**m) - a (monic, char p, m >= 1) return (m, a), else None."""
    p = f.field.characteristic
    if p == 0 or not f.is_monic() or f.is_constant():
        return None
    n = f._deg()
    m = 0
    q = 1
    while q < n:
        q *= p
        m += 1
    if q != n or m == 0:
        return None
    F = f.field
    if any(not F.is_zero(c) for c in f.coeffs[1:-1]):
        return None
    return m, F.neg(f.coeffs[0])
