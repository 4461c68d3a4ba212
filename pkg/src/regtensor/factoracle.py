"""Irreducibility and factorization oracles with replayable certificates.

Coverage is deliberately narrow:

* univariate polynomials over finite fields (squarefree, distinct-degree and
  Cantor-Zassenhaus equal-degree factorization; Rabin's test certifies);
* binomials X^(p^m) - a over characteristic-p function fields, decided by
  whether a is a p-th power in the field;
* quadratics over multiquadratic fields Q(sqrt d_1, ..., sqrt d_n), over
  prime fields and over rational function fields of odd characteristic.

Everything else raises ``UncertifiableIrreducibility``; nothing is guessed.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from .exactscalar import QQ, is_prime
from .polyrat import MultiPoly, RatFunc, RatFuncField, UniPoly, binomial_data, pth_power_test, uni_gcd


class UncertifiableIrreducibility(Exception):
    """No registered oracle can decide irreducibility for this input."""


class OracleUnavailable(Exception):
    """No registered oracle can factor this polynomial."""


class UnsupportedField(ValueError):
    pass


class BadGenerators(ValueError):
    pass


class CharMismatch(ValueError):
    pass


class Method(str, enum.Enum):
    FINITE_FIELD_FACTORIZATION = "FiniteFieldFactorization"
    BINOMIAL_CRITERION = "BinomialCriterion"
    QUADRATIC_ROOT_SEARCH = "QuadraticRootSearch"
    DEGREE_ONE = "DegreeOne"


@dataclass(frozen=True)
class IrreducibilityCert:
    method: Method
    irreducible: bool
    poly: str
    witness: tuple  # ((label, rendered value), ...) for reports
    payload: Any = field(default=None, compare=False, repr=False)

    def summary(self) -> dict:
        return {
            "method": self.method.value,
            "irreducible": self.irreducible,
            "poly": self.poly,
            "witness": {k: v for k, v in self.witness},
        }


# -----------------------------------------------------------------------------
# finite fields
# -----------------------------------------------------------------------------

def _monic_sort_key(g: UniPoly):
    F = g.field
    return (g._deg(), tuple(repr(F.key(c)) for c in g.coeffs))


def _x(F, var="X") -> UniPoly:
    return UniPoly.x(F, var)


def _one(F, var="X") -> UniPoly:
    return UniPoly.const(F, F.one, var)


def _pth_root_poly(f: UniPoly) -> UniPoly:
    F = f.field
    p = F.characteristic
    return f._new([F.pth_root(f.coeffs[i]) for i in range(0, len(f.coeffs), p)])


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic f over a finite field as prod g_i^i with squarefree, coprime g_i."""
    F = f.field
    p = F.characteristic

    def rec(f: UniPoly) -> dict[int, UniPoly]:
        out: dict[int, UniPoly] = {}

        def put(g, m):
            if not g.is_constant():
                out[m] = out[m] * g if m in out else g

        fp = f.derivative()
        if fp.is_zero():
            for m, g in rec(_pth_root_poly(f)).items():
                put(g, m * p)
            return out
        c = uni_gcd(f, fp)
        w = f.exact_div(c)
        i = 1
        while not w.is_constant():
            y = uni_gcd(w, c)
            put(w.exact_div(y), i)
            i += 1
            w = y
            c = c.exact_div(y)
        if not c.is_constant():
            for m, g in rec(_pth_root_poly(c)).items():
                put(g, m * p)
        return out

    res = rec(f.monic())
    return sorted(((g.monic(), m) for m, g in res.items()), key=lambda t: (t[1], _monic_sort_key(t[0])))


def _frobenius_iterate(h: UniPoly, q: int, mod: UniPoly, times: int = 1) -> UniPoly:
    for _ in range(times):
        h = h.pow_mod(q, mod)
    return h


def distinct_degree(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Split squarefree monic f into products of irreducibles of equal degree."""
    F = f.field
    q = F.order
    X = _x(F, f.var)
    res = []
    rest = f
    h = X
    i = 1
    while rest._deg() >= 2 * i:
        h = h.pow_mod(q, rest)
        g = uni_gcd(rest, h - X)
        if not g.is_constant():
            res.append((g, i))
            rest = rest.exact_div(g)
            h = h % rest
        i += 1
    if not rest.is_constant():
        res.append((rest.monic(), rest._deg()))
    return res


def _random_poly(F, n: int, rng: random.Random, var: str) -> UniPoly:
    return UniPoly(F, [F.random_element(rng) for _ in range(n)], var)


def equal_degree(f: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    """Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d."""
    F = f.field
    q = F.order
    n = f._deg()
    r = n // d
    if r == 1:
        return [f.monic()]
    factors = [f.monic()]
    p = F.characteristic
    while len(factors) < r:
        a = _random_poly(F, n, rng, f.var)
        if a.is_constant():
            continue
        if p == 2:
            k = q.bit_length() - 1
            t = a % f
            acc = t
            for _ in range(k * d - 1):
                t = (t * t) % f
                acc = acc + t
            b = acc
        else:
            b = a.pow_mod((q**d - 1) // 2, f) - _one(F, f.var)
        nxt = []
        for u in factors:
            if u._deg() == d:
                nxt.append(u)
                continue
            g = uni_gcd(u, b % u) if not (b % u).is_zero() else u
            if 0 < g._deg() < u._deg():
                nxt.extend([g, u.exact_div(g).monic()])
            else:
                nxt.append(u)
        factors = nxt
    return sorted(factors, key=_monic_sort_key)


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def rabin_irreducible(f: UniPoly) -> bool:
    """Rabin's test over a finite field F_q."""
    F = f.field
    q = F.order
    n = f._deg()
    if n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    X = _x(F, f.var)
    for r in _prime_divisors(n):
        h = _frobenius_iterate(X, q, f, n // r)
        if not uni_gcd(f, h - X).is_constant():
            return False
    return _frobenius_iterate(X, q, f, n) == X % f


def factor_finite_field(f: UniPoly, seed: int = 0):
    """Return (leading coefficient, [(monic irreducible, multiplicity), ...])."""
    F = f.field
    if not F.order:
        raise UnsupportedField("finite field required")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    lc = f.leading_coeff()
    if f.is_constant():
        return lc, []
    rng = random.Random(seed)
    out = []
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                out.append((irr, m))
    out.sort(key=lambda t: (_monic_sort_key(t[0]), t[1]))
    return lc, out


def multiply_factors(F, lc, factors, var="X") -> UniPoly:
    acc = UniPoly.const(F, lc, var)
    for g, m in factors:
        acc = acc * g**m
    return acc


# -----------------------------------------------------------------------------
# binomials in characteristic p
# -----------------------------------------------------------------------------

class PthRootView:
    """Adapter answering "is a a p-th power in L" for some concrete field L.

    ``root_of(a)`` returns the unique p-th root of a in a perfect-closure-free
    ambient (or None when none exists); ``contains(r)`` decides membership of
    that root in L.
    """

    def __init__(self, characteristic: int, field, root_of: Callable, contains: Callable, label: str):
        self.characteristic = characteristic
        self.field = field
        self.root_of = root_of
        self.contains = contains
        self.label = label


def ratfunc_root_view(F: RatFuncField) -> PthRootView:
    """The full rational function field F_p(vars): every existing root lies in it."""
    return PthRootView(F.characteristic, F, pth_power_test, lambda r: True, repr(F))


def binomial_irreducible(p: int, m: int, a, L: PthRootView):
    """Decide irreducibility of X^(p^m) - a over L; returns (bool, cert)."""
    if L.characteristic != p:
        raise CharMismatch(f"field of characteristic {L.characteristic}, binomial for p={p}")
    if m < 1:
        raise ValueError("m must be at least 1")
    F = L.field
    if F.is_zero(a):
        raise ValueError("a must be nonzero")
    poly = f"X^{p**m} - ({F.to_str(a)})"
    r = L.root_of(a)
    if r is not None and L.contains(r):
        cert = IrreducibilityCert(
            Method.BINOMIAL_CRITERION,
            False,
            poly,
            (("p_th_root", F.to_str(r)), ("factor", f"X^{p**(m-1)} - ({F.to_str(r)})"), ("multiplicity", str(p))),
            payload={"p": p, "m": m, "a": a, "root": r, "view": L},
        )
        return False, cert
    cert = IrreducibilityCert(
        Method.BINOMIAL_CRITERION,
        True,
        poly,
        (("not_a_pth_power_in", L.label), ("a", F.to_str(a))),
        payload={"p": p, "m": m, "a": a, "view": L},
    )
    return True, cert


def binomial_factor(cert: IrreducibilityCert, var="X") -> UniPoly:
    """For a reducible binomial certificate: the factor g with binomial = g^p."""
    pl = cert.payload
    F = pl["view"].field
    return UniPoly.monomial(F, pl["p"] ** (pl["m"] - 1), var=var) - UniPoly.const(F, pl["root"], var)


# -----------------------------------------------------------------------------
# multiquadratic fields over Q
# -----------------------------------------------------------------------------

def is_rational_square(a) -> Optional[Fraction]:
    a = Fraction(a)
    if a < 0:
        return None
    n, d = a.numerator, a.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def squarefree_part(n: int) -> tuple[int, int]:
    """n = s^2 * d with d squarefree (sign kept in d); returns (d, s)."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, d = 1, 1
    k = 2
    while k * k <= n:
        while n % (k * k) == 0:
            n //= k * k
            s *= k
        if n % k == 0:
            n //= k
            d *= k
        k += 1
    return sign * d * n, s


def rational_squarefree(a: Fraction) -> tuple[int, Fraction]:
    """a = q^2 * d with d a squarefree integer."""
    a = Fraction(a)
    d, s = squarefree_part(a.numerator * a.denominator)
    return d, Fraction(s, a.denominator)


def validate_generators(gens: Sequence[int]) -> None:
    for d in gens:
        if d in (0, 1) or squarefree_part(d)[1] != 1:
            raise BadGenerators(f"{d} is not a squarefree integer other than 0, 1")
    n = len(gens)
    for mask in range(1, 1 << n):
        prod = 1
        for i in range(n):
            if mask >> i & 1:
                prod *= gens[i]
        if is_rational_square(prod) is not None:
            raise BadGenerators(f"generators {list(gens)} are dependent modulo squares")


class MultiQuadField:
    """Q(sqrt d_1, ..., sqrt d_n); elements are tuples of 2^n Fractions.

    Coordinate ``mask`` multiplies prod_{i in mask} sqrt(d_i).
    """

    characteristic = 0
    order = None

    def __init__(self, gens: Sequence[int], names: Sequence[str] | None = None, *, check: bool = True):
        self.gens = tuple(int(d) for d in gens)
        if check:
            validate_generators(self.gens)
        self.n = len(self.gens)
        self.size = 1 << self.n
        self.names = tuple(names) if names else tuple(f"sqrt({d})" for d in self.gens)
        z = Fraction(0)
        self.zero = (z,) * self.size
        self.one = (Fraction(1),) + (z,) * (self.size - 1)
        self._prod = {}
        for a in range(self.size):
            for b in range(self.size):
                c = Fraction(1)
                for i in range(self.n):
                    if (a >> i & 1) and (b >> i & 1):
                        c *= self.gens[i]
                self._prod[a, b] = (a ^ b, c)

    def __repr__(self):
        return f"QQ({', '.join(self.names)})" if self.n else "QQ"

    def __eq__(self, other):
        return isinstance(other, MultiQuadField) and other.gens == self.gens

    def __hash__(self):
        return hash(("MQ", self.gens))

    @property
    def degree(self) -> int:
        return self.size

    def adjoin(self, d: int, name: str | None = None) -> MultiQuadField:
        return MultiQuadField(self.gens + (d,), self.names + ((name or f"sqrt({d})"),))

    def sqrt_gen(self, i: int):
        v = [Fraction(0)] * self.size
        v[1 << i] = Fraction(1)
        return tuple(v)

    def embed(self, a, larger: MultiQuadField):
        """Coordinates in a field whose generator list extends this one."""
        if larger.gens[: self.n] != self.gens:
            raise ValueError("not an extension by appended generators")
        return tuple(a) + (Fraction(0),) * (larger.size - self.size)

    def convert(self, a):
        if isinstance(a, tuple):
            if len(a) != self.size:
                raise ValueError("coordinate length mismatch")
            return a
        return (QQ.convert(a),) + (Fraction(0),) * (self.size - 1)

    def from_int(self, n):
        return self.convert(Fraction(n))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        out = [Fraction(0)] * self.size
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                k, c = self._prod[i, j]
                out[k] += c * x * y
        return tuple(out)

    def scale(self, a, c):
        return tuple(x * c for x in a)

    def conjugate(self, a, i: int):
        return tuple(-x if (m >> i & 1) else x for m, x in enumerate(a))

    def inv(self, a):
        if self.is_zero(a):
            from .exactscalar import DivisionByZero

            raise DivisionByZero("inverse of zero")
        # multiply by conjugates one generator at a time until rational
        num = self.one
        cur = a
        for i in range(self.n):
            c = self.conjugate(cur, i)
            num = self.mul(num, c)
            cur = self.mul(cur, c)
        r = cur[0]
        return self.scale(num, 1 / r)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = self.one
        while n:
            if n & 1:
                r = self.mul(r, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return r

    def is_zero(self, a):
        return not any(a)

    def is_one(self, a):
        return a[0] == 1 and not any(a[1:])

    def eq(self, a, b):
        return a == b

    def key(self, a):
        return tuple((x.numerator, x.denominator) for x in a)

    def rational_part(self, a):
        return a[0] if not any(a[1:]) else None

    def monomial_name(self, mask: int) -> str:
        return "*".join(self.names[i] for i in range(self.n) if mask >> i & 1)

    def to_str(self, a) -> str:
        parts = []
        for m, x in enumerate(a):
            if not x:
                continue
            mono = self.monomial_name(m)
            neg = x < 0
            ax = -x if neg else x
            if not mono:
                t = str(ax)
            elif ax == 1:
                t = mono
            else:
                t = f"{ax}*{mono}"
            if not parts:
                parts.append(f"-{t}" if neg else t)
            else:
                parts.append(f" - {t}" if neg else f" + {t}")
        return "".join(parts) or "0"

    def is_negative_literal(self, a) -> bool:
        nz = [x for x in a if x]
        return len(nz) == 1 and nz[0] < 0


def sqrt_in_multiquadratic(a, gens: Sequence[int]):
    """sqrt(a) for rational a inside Q(sqrt d_i): returns (q, T) meaning q*prod_{i in T} sqrt(d_i)."""
    validate_generators(list(gens))
    a = Fraction(a)
    if a == 0:
        return Fraction(0), ()
    n = len(gens)
    for size in range(n + 1):
        for T in itertools.combinations(range(n), size):
            prod = 1
            for i in T:
                prod *= gens[i]
            q = is_rational_square(a / prod)
            if q is not None:
                return q, T
    return None


def mq_sqrt(K: MultiQuadField, a):
    """A square root of a in K, or None.  Recursive norm descent over the generators."""
    if K.is_zero(a):
        return K.zero
    if K.n == 0:
        q = is_rational_square(a[0])
        return None if q is None else (q,)
    sub = MultiQuadField(K.gens[:-1], K.names[:-1], check=False)
    half = sub.size
    d = K.gens[-1]
    lo, hi = tuple(a[:half]), tuple(a[half:])

    def up(x, y=None):
        y = y if y is not None else sub.zero
        return tuple(x) + tuple(y)

    if sub.is_zero(hi):
        s = mq_sqrt(sub, lo)
        if s is not None:
            return up(s)
        s = mq_sqrt(sub, sub.scale(lo, Fraction(1, d)))
        if s is not None:
            return up(sub.zero, s)
        return None
    norm = sub.sub(sub.mul(lo, lo), sub.scale(sub.mul(hi, hi), d))
    c = mq_sqrt(sub, norm)
    if c is None:
        return None
    for sign in (1, -1):
        x2 = sub.scale(sub.add(lo, sub.scale(c, sign)), Fraction(1, 2))
        x = mq_sqrt(sub, x2)
        if x is not None and not sub.is_zero(x):
            y = sub.mul(hi, sub.inv(sub.scale(x, 2)))
            cand = up(x, y)
            if K.mul(cand, cand) == tuple(a):
                return cand
    return None


def _primes(start: int = 3):
    n = start
    while True:
        if is_prime(n):
            yield n
        n += 1


def _sqrt_mod(a: int, p: int) -> Optional[int]:
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _image_mod(a, roots: Sequence[int], ell: int) -> Optional[int]:
    acc = 0
    for mask, x in enumerate(a):
        if not x:
            continue
        if x.denominator % ell == 0:
            return None
        v = x.numerator * pow(x.denominator, -1, ell)
        for i, r in enumerate(roots):
            if mask >> i & 1:
                v *= r
        acc = (acc + v) % ell
    return acc


def nonsquare_witness(K: MultiQuadField, a, limit: int = 50000):
    """Find (ell, roots) with a ring map K -> F_ell sending a to a non-residue."""
    for ell in _primes(3):
        if ell > limit:
            return None
        if any(d % ell == 0 for d in K.gens):
            continue
        base = [_sqrt_mod(d, ell) for d in K.gens]
        if any(r is None for r in base):
            continue
        for signs in itertools.product((1, -1), repeat=K.n):
            roots = [(s * r) % ell for s, r in zip(signs, base)]
            img = _image_mod(a, roots, ell)
            if img and pow(img, (ell - 1) // 2, ell) == ell - 1:
                return ell, tuple(roots)
    return None


def check_nonsquare_witness(K: MultiQuadField, a, ell: int, roots: Sequence[int]) -> bool:
    if not is_prime(ell) or ell == 2:
        return False
    if any((r * r - d) % ell for r, d in zip(roots, K.gens)):
        return False
    img = _image_mod(a, roots, ell)
    return bool(img) and pow(img, (ell - 1) // 2, ell) == ell - 1


# -----------------------------------------------------------------------------
# square roots in prime fields and rational function fields
# -----------------------------------------------------------------------------

def prime_field_sqrt(F, a):
    if F.characteristic == 0:
        q = is_rational_square(a)
        return q
    return _sqrt_mod(a, F.characteristic)


def poly_sqrt(f: MultiPoly) -> Optional[MultiPoly]:
    """Square root of a polynomial over Q or F_p (p odd) by leading-term extraction."""
    dom = f.dom
    if dom.characteristic == 2:
        raise UnsupportedField("square roots by leading terms need characteristic != 2")
    if f.is_zero():
        return f
    le = f.leading_exp()
    if any(e % 2 for e in le):
        return None
    c = prime_field_sqrt(dom, f.leading_coeff())
    if c is None:
        return None
    s0e = tuple(e // 2 for e in le)
    s = MultiPoly.monomial(dom, f.vars, s0e, dom.convert(c))
    two_lc = dom.mul(dom.from_int(2), dom.convert(c))
    r = f - s * s
    while not r.is_zero():
        re_ = r.leading_exp()
        te = tuple(a - b for a, b in zip(re_, s0e))
        if any(x < 0 for x in te):
            return None
        t = MultiPoly.monomial(dom, f.vars, te, dom.div(r.leading_coeff(), two_lc))
        # the leading term of the remainder strictly drops in grlex, so this terminates
        s = s + t
        r = f - s * s
    return s


def ratfunc_sqrt(h: RatFunc) -> Optional[RatFunc]:
    if h.is_zero():
        return h
    n = poly_sqrt(h.num)
    if n is None:
        return None
    d = poly_sqrt(h.den)
    if d is None:
        return None
    return RatFunc(n, d)


# -----------------------------------------------------------------------------
# field views and the oracle registry
# -----------------------------------------------------------------------------

@dataclass
class FieldView:
    """What the oracles know about a coefficient field.

    kind is one of "finite", "multiquadratic", "ratfunc", "ambient".
    For "multiquadratic" ``to_mq``/``from_mq`` translate between the field's
    own elements and MultiQuadField coordinates.
    """

    kind: str
    field: Any
    mq: Optional[MultiQuadField] = None
    to_mq: Optional[Callable] = None
    from_mq: Optional[Callable] = None
    roots: Optional[PthRootView] = None
    label: str = ""


def finite_view(F) -> FieldView:
    return FieldView("finite", F, label=repr(F))


def rational_view() -> FieldView:
    K = MultiQuadField(())
    return FieldView("multiquadratic", QQ, mq=K, to_mq=lambda a: (Fraction(a),), from_mq=lambda v: v[0], label="QQ")


def multiquadratic_view(K: MultiQuadField) -> FieldView:
    return FieldView("multiquadratic", K, mq=K, to_mq=lambda a: a, from_mq=lambda v: v, label=repr(K))


def ratfunc_view(F: RatFuncField) -> FieldView:
    roots = ratfunc_root_view(F) if F.characteristic else None
    return FieldView("ratfunc", F, roots=roots, label=repr(F))


@dataclass
class FactorResult:
    irreducible: bool
    factors: list  # [(monic UniPoly, multiplicity)] when known
    cert: IrreducibilityCert


def _render(f: UniPoly) -> str:
    return str(f)


def _quadratic_roots(f: UniPoly, view: FieldView):
    """Roots of monic quadratic f in the view's field, or None; plus witness data."""
    F = view.field
    f = f.monic()
    b, c = f.coeff(1), f.coeff(0)
    if view.kind == "finite":
        roots = [x for x in F.elements() if F.is_zero(f.evaluate(x))] if F.order <= 4096 else None
        if roots is None:
            raise UncertifiableIrreducibility("finite field too large for root enumeration")
        if not roots:
            return None, ("no_root_in", repr(F))
        r1 = roots[0]
        r2 = F.sub(F.neg(b), r1)
        return (r1, r2), None
    four = F.from_int(4)
    disc = F.sub(F.mul(b, b), F.mul(four, c))
    if view.kind == "multiquadratic":
        K = view.mq
        D = view.to_mq(disc)
        s = mq_sqrt(K, D)
        if s is None:
            w = nonsquare_witness(K, D)
            if w is None:
                raise UncertifiableIrreducibility("no small prime certifies the non-square discriminant")
            return None, ("nonsquare_mod", w)
        half = Fraction(1, 2)
        mb = K.neg(view.to_mq(b))
        r1 = K.scale(K.add(mb, s), half)
        r2 = K.scale(K.sub(mb, s), half)
        return (view.from_mq(r1), view.from_mq(r2)), None
    if view.kind == "ratfunc":
        if F.characteristic == 2:
            raise UncertifiableIrreducibility("quadratics over rational function fields of characteristic 2")
        s = ratfunc_sqrt(disc)
        if s is None:
            return None, ("nonsquare_by_extraction", str(disc))
        two_inv = F.inv(F.from_int(2))
        r1 = F.mul(F.add(F.neg(b), s), two_inv)
        r2 = F.mul(F.sub(F.neg(b), s), two_inv)
        return (r1, r2), None
    raise UncertifiableIrreducibility(f"quadratic oracle does not cover {view.kind} fields")


def factor_quadratic(f: UniPoly, view: FieldView) -> FactorResult:
    """Split a quadratic or certify it irreducible over the view's field."""
    if f._deg() != 2:
        raise ValueError("factor_quadratic expects degree 2")
    if view.kind not in ("finite", "multiquadratic", "ratfunc"):
        raise UnsupportedField(view.kind)
    F = view.field
    roots, wit = _quadratic_roots(f, view)
    poly = _render(f)
    if roots is None:
        cert = IrreducibilityCert(
            Method.QUADRATIC_ROOT_SEARCH, True, poly, (wit if isinstance(wit[1], str) else (wit[0], repr(wit[1])),),
            payload={"kind": view.kind, "witness": wit, "view": view},
        )
        return FactorResult(True, [(f.monic(), 1)], cert)
    X = _x(F, f.var)
    r1, r2 = roots
    l1 = X - UniPoly.const(F, r1, f.var)
    l2 = X - UniPoly.const(F, r2, f.var)
    facs = [(l1, 2)] if F.eq(r1, r2) else sorted([(l1, 1), (l2, 1)], key=lambda t: _monic_sort_key(t[0]))
    cert = IrreducibilityCert(
        Method.QUADRATIC_ROOT_SEARCH, False, poly, (("roots", f"{F.to_str(r1)}, {F.to_str(r2)}"),),
        payload={"kind": view.kind, "roots": (r1, r2), "view": view},
    )
    return FactorResult(False, facs, cert)


def _degree_one(f, view):
    return FactorResult(True, [(f.monic(), 1)], IrreducibilityCert(Method.DEGREE_ONE, True, _render(f), ()))


def _finite(f, view):
    F = view.field
    lc, facs = factor_finite_field(f)
    poly = _render(f)
    if len(facs) == 1 and facs[0][1] == 1:
        n = f._deg()
        cert = IrreducibilityCert(
            Method.FINITE_FIELD_FACTORIZATION, True, poly,
            (("rabin_degree", str(n)), ("prime_divisors", ",".join(map(str, _prime_divisors(n)))), ("q", str(F.order))),
            payload={"view": view},
        )
        return FactorResult(True, facs, cert)
    cert = IrreducibilityCert(
        Method.FINITE_FIELD_FACTORIZATION, False, poly,
        (("factors", " * ".join(f"({g})^{m}" if m > 1 else f"({g})" for g, m in facs)),),
        payload={"view": view, "lc": lc, "factors": facs},
    )
    return FactorResult(False, facs, cert)


def _binomial(f, view):
    m, a = binomial_data(f)
    p = view.field.characteristic
    irr, cert = binomial_irreducible(p, m, a, view.roots)
    if irr:
        return FactorResult(True, [(f.monic(), 1)], cert)
    g = binomial_factor(cert, f.var)
    return FactorResult(False, [(g, p)], cert)


def _covers_degree_one(f, view):
    return f._deg() == 1


def _covers_finite(f, view):
    return view.kind == "finite" and bool(getattr(view.field, "order", None))


def _covers_binomial(f, view):
    return (
        view.roots is not None
        and view.field.characteristic > 0
        and binomial_data(f) is not None
    )


def _covers_quadratic(f, view):
    if f._deg() != 2:
        return False
    if view.kind == "multiquadratic":
        return True
    if view.kind == "ratfunc":
        return view.field.characteristic != 2
    return False


@dataclass(frozen=True)
class Oracle:
    name: str
    covers: Callable
    run: Callable


REGISTRY: list[Oracle] = [
    Oracle("degree-one", _covers_degree_one, _degree_one),
    Oracle("finite-field", _covers_finite, _finite),
    Oracle("binomial", _covers_binomial, _binomial),
    Oracle("quadratic", _covers_quadratic, lambda f, v: factor_quadratic(f, v)),
]


def decide(f: UniPoly, view: FieldView) -> FactorResult:
    """Consult the registry; the first oracle whose capability check passes answers."""
    if f.is_constant():
        raise ValueError("irreducibility of a constant")
    for oracle in REGISTRY:
        if oracle.covers(f, view):
            return oracle.run(f, view)
    raise UncertifiableIrreducibility(f"no oracle decides irreducibility of {f} over {view.label or view.kind}")


def factor_over(f: UniPoly, view: FieldView) -> list[tuple[UniPoly, int]]:
    """Complete factorization into monic irreducibles for the covered classes."""
    if f.is_constant():
        return []
    if _covers_finite(f, view):
        return factor_finite_field(f)[1]
    try:
        res = decide(f, view)
    except UncertifiableIrreducibility as exc:
        raise OracleUnavailable(str(exc)) from exc
    if res.irreducible:
        return [(f.monic(), 1)]
    out = []
    for g, m in res.factors:
        for h, k in factor_over(g, view):
            out.append((h, m * k))
    merged: dict = {}
    for h, m in out:
        merged[h] = merged.get(h, 0) + m
    return sorted(merged.items(), key=lambda t: _monic_sort_key(t[0]))


# -----------------------------------------------------------------------------
# certificate replay
# -----------------------------------------------------------------------------

def verify_certificate(cert: IrreducibilityCert, f: UniPoly) -> bool:
    """Re-check a certificate from its witness data alone."""
    F = f.field
    if cert.method is Method.DEGREE_ONE:
        return cert.irreducible and f._deg() == 1
    pl = cert.payload or {}
    if cert.method is Method.FINITE_FIELD_FACTORIZATION:
        if cert.irreducible:
            return rabin_irreducible(f)
        facs = pl["factors"]
        return multiply_factors(F, pl["lc"], facs, f.var) == f and (len(facs) > 1 or facs[0][1] > 1)
    if cert.method is Method.BINOMIAL_CRITERION:
        view = pl["view"]
        p, m, a = pl["p"], pl["m"], pl["a"]
        bd = binomial_data(f)
        if bd is None or bd[0] != m or not F.eq(bd[1], a):
            return False
        if cert.irreducible:
            r = view.root_of(a)
            return r is None or not view.contains(r)
        r = pl["root"]
        if not view.contains(r) or not F.eq(F.pow(r, p), a):
            return False
        return binomial_factor(cert, f.var) ** p == f
    if cert.method is Method.QUADRATIC_ROOT_SEARCH:
        view = pl["view"]
        if not cert.irreducible:
            r1, r2 = pl["roots"]
            X = _x(F, f.var)
            prod = (X - UniPoly.const(F, r1, f.var)) * (X - UniPoly.const(F, r2, f.var))
            return prod == f.monic()
        kind, wit = pl["kind"], pl["witness"]
        if kind == "finite":
            return not any(F.is_zero(f.evaluate(x)) for x in F.elements())
        fm = f.monic()
        b, c = fm.coeff(1), fm.coeff(0)
        disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), c))
        if kind == "multiquadratic":
            ell, roots = wit[1]
            return check_nonsquare_witness(view.mq, view.to_mq(disc), ell, roots)
        if kind == "ratfunc":
            return ratfunc_sqrt(disc) is None
    return False
