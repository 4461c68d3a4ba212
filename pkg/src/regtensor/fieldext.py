"""Simple algebraic extensions base[a]/(f(a)) as field objects.

Elements are fixed-length tuples of base-field elements (coefficients of
1, a, ..., a^(d-1)).  Nesting these objects gives towers and finite fields
F_(p^k) alike.
"""

from __future__ import annotations

import itertools

from .polyrat import UniPoly, uni_xgcd


def _tuple_depth(a) -> int:
    d = 0
    while isinstance(a, tuple):
        d += 1
        a = a[0]
    return d


class SimpleExtension:
    def __init__(self, base, modulus: UniPoly, name: str = "a"):
        if not modulus.is_monic() or modulus._deg() < 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.base = base
        self.modulus = modulus
        self.name = name
        self.d = modulus._deg()
        self.characteristic = base.characteristic
        border = getattr(base, "order", None)
        self.order = border**self.d if border else None
        z = base.zero
        self.zero = (z,) * self.d
        self.one = (base.one,) + (z,) * (self.d - 1)
        self._red = [base.neg(c) for c in modulus.coeffs[:-1]]
        self.depth = getattr(base, "depth", 0) + 1

    def __repr__(self):
        return f"{self.base!r}[{self.name}]/({self.modulus})"

    # -- conversions -------------------------------------------------------
    def gen(self):
        if self.d == 1:
            return (self._red[0],)
        return (self.base.zero, self.base.one) + (self.base.zero,) * (self.d - 2)

    def convert(self, a):
        if _tuple_depth(a) >= self.depth:
            return a
        return (self.base.convert(a),) + (self.base.zero,) * (self.d - 1)

    def from_int(self, n: int):
        return (self.base.from_int(n),) + (self.base.zero,) * (self.d - 1)

    def from_poly(self, f: UniPoly):
        return self._reduce(list(f.coeffs))

    def to_poly(self, a, var=None) -> UniPoly:
        return UniPoly(self.base, a, var or self.name)

    # -- arithmetic ---------------------------------------------------------
    def _reduce(self, cs: list):
        B = self.base
        d = self.d
        red = self._red
        for k in range(len(cs) - 1, d - 1, -1):
            c = cs[k]
            if B.is_zero(c):
                continue
            for j, r in enumerate(red):
                if not B.is_zero(r):
                    cs[k - d + j] = B.add(cs[k - d + j], B.mul(c, r))
        cs = cs[:d] + [B.zero] * (d - len(cs))
        return tuple(cs)

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def mul(self, a, b):
        B = self.base
        z = B.is_zero
        out = [B.zero] * (2 * self.d - 1)
        for i, x in enumerate(a):
            if z(x):
                continue
            for j, y in enumerate(b):
                if z(y):
                    continue
                out[i + j] = B.add(out[i + j], B.mul(x, y))
        return self._reduce(out)

    def scale(self, a, c):
        B = self.base
        return tuple(B.mul(x, c) for x in a)

    def inv(self, a):
        if self.is_zero(a):
            from .exactscalar import DivisionByZero

            raise DivisionByZero("inverse of zero")
        g, s, _ = uni_xgcd(self.to_poly(a), self.modulus)
        if g._deg() != 0:
            raise ArithmeticError(f"modulus {self.modulus} is reducible: shares factor {g}")
        return self.from_poly(s)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def is_zero(self, a) -> bool:
        return all(self.base.is_zero(x) for x in a)

    def is_one(self, a) -> bool:
        return self.base.is_one(a[0]) and all(self.base.is_zero(x) for x in a[1:])

    def eq(self, a, b) -> bool:
        return a == b

    def key(self, a):
        return tuple(self.base.key(x) for x in a)

    def base_part(self, a):
        """The base element when a lies in the base field, else None."""
        if all(self.base.is_zero(x) for x in a[1:]):
            return a[0]
        return None

    def to_str(self, a) -> str:
        return str(UniPoly(self.base, a, self.name))

    def is_negative_literal(self, a) -> bool:
        # a single term c*gen^i prints with a leading minus when c does
        nz = [x for x in a if not self.base.is_zero(x)]
        return len(nz) == 1 and self.base.is_negative_literal(nz[0])

    # -- finite-field extras ------------------------------------------------
    def elements(self):
        for cs in itertools.product(list(self.base.elements()), repeat=self.d):
            yield tuple(cs)

    def random_element(self, rng):
        return tuple(self.base.random_element(rng) for _ in range(self.d))

    def frobenius(self, a):
        return self.pow(a, self.characteristic)

    def pth_root(self, a):
        """Unique p-th root in a finite field: a^(q/p)."""
        if self.order is None:
            raise ValueError("p-th roots computed for finite fields only")
        return self.pow(a, self.order // self.characteristic)
