"""Exact scalars: rationals and prime-field residues.

Two layers live here.  ``Fp`` is a small immutable value type used at the
public surface (parsing, tests, printing).  ``QQ`` and ``GF(p)`` are *domain*
objects operating on raw representations (``Fraction`` and ``int``); the
polynomial code calls their methods directly so the hot loops never allocate
wrapper objects.
"""

from __future__ import annotations

import functools
import random
from fractions import Fraction


class DivisionByZero(ZeroDivisionError):
    pass


class ModulusMismatch(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def rational(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise DivisionByZero("rational with zero denominator")
    return Fraction(num, den)


class Fp:
    """An element of the prime field Z/pZ."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if not is_prime(modulus):
            raise ValueError(f"modulus {modulus} is not prime")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", value % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("Fp is immutable")

    def _other(self, other) -> int:
        if isinstance(other, Fp):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"F_{self.modulus} vs F_{other.modulus}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.modulus)

    def inverse(self) -> Fp:
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.modulus}")
        return Fp(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.modulus).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.modulus) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.value, n, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Fp):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"F_{self.modulus} vs F_{other.modulus}")
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return f"Fp({self.value}, {self.modulus})"

    def __str__(self):
        return str(self.value)


def frobenius_scalar(a: Fp) -> Fp:
    """Return a**p.  Equal to ``a`` by Fermat; kept as a hook for larger fields."""
    if not isinstance(a, Fp):
        raise TypeError("frobenius_scalar expects a prime-field element")
    return a ** a.modulus


class RationalField:
    """The field Q; raw elements are ``Fraction``."""

    characteristic = 0
    order = None
    zero = Fraction(0)
    one = Fraction(1)
    is_exact_prime = True

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __reduce__(self):
        return (RationalField, ())

    def convert(self, a) -> Fraction:
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int):
            return Fraction(a)
        raise TypeError(f"cannot convert {a!r} into QQ")

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero in QQ")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in QQ")
        return a / b

    def pow(self, a, n: int):
        return a**n

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == 1

    def eq(self, a, b) -> bool:
        return a == b

    def key(self, a):
        return (a.numerator, a.denominator)

    def to_str(self, a) -> str:
        return str(a)

    def is_negative_literal(self, a) -> bool:
        return a < 0


class PrimeField:
    """The field Z/pZ; raw elements are ints in [0, p)."""

    is_exact_prime = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __reduce__(self):
        return (GF, (self.p,))

    def convert(self, a) -> int:
        if isinstance(a, Fp):
            if a.modulus != self.p:
                raise ModulusMismatch(f"F_{a.modulus} element in F_{self.p}")
            return a.value
        if isinstance(a, int):
            return a % self.p
        if isinstance(a, Fraction):
            if a.denominator % self.p == 0:
                raise DivisionByZero(f"{a} has no image in F_{self.p}")
            return a.numerator * pow(a.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot convert {a!r} into GF({self.p})")

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, n: int):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == 1

    def eq(self, a, b) -> bool:
        return a == b

    def key(self, a):
        return a

    def to_str(self, a) -> str:
        return str(a)

    def is_negative_literal(self, a) -> bool:
        return False

    def elements(self):
        return range(self.p)

    def random_element(self, rng: random.Random):
        return rng.randrange(self.p)

    def frobenius(self, a):
        return a

    def pth_root(self, a):
        return a


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)
