"""Sparse multivariate polynomials over an exact field.

A polynomial is a map from exponent tuples to nonzero raw coefficients of a
domain object (``QQ``, ``GF(p)``, or any field object exposing the same
methods, e.g. a rational-function field).  Terms are ordered graded
lexicographically with the declared variable order.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..exactscalar import PrimeField
from .densegcd import dense_exact_div_terms, dense_gcd_terms


class InexactDivision(ArithmeticError):
    pass


class ArityMismatch(ValueError):
    pass


def grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("dom", "vars", "terms", "_hash")

    def __init__(self, dom, variables: Sequence[str], terms: dict | None = None, *, clean: bool = True):
        self.dom = dom
        self.vars = tuple(variables)
        if terms is None:
            terms = {}
        elif clean:
            n = len(self.vars)
            z = dom.is_zero
            out = {}
            for e, c in terms.items():
                if len(e) != n:
                    raise ArityMismatch(f"exponent {e} for variables {self.vars}")
                if not z(c):
                    out[e] = c
            terms = out
        self.terms = terms
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, dom, variables) -> MultiPoly:
        return cls(dom, variables, {}, clean=False)

    @classmethod
    def const(cls, dom, variables, c) -> MultiPoly:
        variables = tuple(variables)
        c = dom.convert(c)
        if dom.is_zero(c):
            return cls(dom, variables, {}, clean=False)
        return cls(dom, variables, {(0,) * len(variables): c}, clean=False)

    @classmethod
    def var(cls, dom, variables, name: str) -> MultiPoly:
        variables = tuple(variables)
        i = variables.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(dom, variables, {e: dom.one}, clean=False)

    @classmethod
    def monomial(cls, dom, variables, exp: tuple, c=None) -> MultiPoly:
        c = dom.one if c is None else c
        return cls(dom, variables, {tuple(exp): c})

    def _new(self, terms: dict) -> MultiPoly:
        return MultiPoly(self.dom, self.vars, terms, clean=False)

    def _check(self, other: MultiPoly):
        if other.vars != self.vars:
            raise ArityMismatch(f"{self.vars} vs {other.vars}")

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.const(self.dom, self.vars, other)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_one(self) -> bool:
        return self.is_constant() and not self.is_zero() and self.dom.is_one(self.constant_coeff())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_coeff(self):
        return self.terms.get((0,) * len(self.vars), self.dom.zero)

    def __bool__(self):
        return bool(self.terms)

    # -- ring ops -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        add, z = self.dom.add, self.dom.is_zero
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = add(out[e], c)
                if z(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.dom.neg
        return self._new({e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(self.dom.convert(other))
        self._check(other)
        if not self.terms or not other.terms:
            return self._new({})
        mul, add, z = self.dom.mul, self.dom.add, self.dom.is_zero
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = mul(c1, c2)
                if e in out:
                    out[e] = add(out[e], c)
                else:
                    out[e] = c
        return self._new({e: c for e, c in out.items() if not z(c)})

    __rmul__ = __mul__

    def scale(self, c) -> MultiPoly:
        if self.dom.is_zero(c):
            return self._new({})
        mul = self.dom.mul
        return self._new({e: mul(v, c) for e, v in self.terms.items()})

    def mul_monomial(self, exp: tuple, c=None) -> MultiPoly:
        mul = self.dom.mul
        if c is None:
            return self._new({tuple(a + b for a, b in zip(e, exp)): v for e, v in self.terms.items()})
        return self._new({tuple(a + b for a, b in zip(e, exp)): mul(v, c) for e, v in self.terms.items()})

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.dom, self.vars, self.dom.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frobenius(self, q: int) -> MultiPoly:
        """Return f**q for q a power of the characteristic (coefficients assumed fixed by Frobenius)."""
        fr = getattr(self.dom, "frobenius", None)
        terms = {}
        for e, c in self.terms.items():
            cc = c
            if fr is not None:
                k = q
                while k > 1:
                    cc = fr(cc)
                    k //= self.dom.characteristic
            terms[tuple(a * q for a in e)] = cc
        return self._new(terms)

    # -- comparisons ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        try:
            return self == MultiPoly.const(self.dom, self.vars, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- structure ----------------------------------------------------
    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def min_degree_in(self, i: int) -> int:
        return min(e[i] for e in self.terms)

    def occurring(self) -> set[int]:
        occ = set()
        for e in self.terms:
            for i, a in enumerate(e):
                if a:
                    occ.add(i)
        return occ

    def leading_exp(self) -> tuple:
        return max(self.terms, key=grlex_key)

    def leading_coeff(self):
        return self.terms[self.leading_exp()]

    def monic(self) -> MultiPoly:
        if not self.terms:
            return self
        lc = self.leading_coeff()
        if self.dom.is_one(lc):
            return self
        return self.scale(self.dom.inv(lc))

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coeffs_in(self, i: int) -> dict:
        """Split as sum_d c_d * x_i**d, returning {d: c_d} with c_d free of x_i."""
        parts: dict = {}
        for e, c in self.terms.items():
            d = e[i]
            e0 = e[:i] + (0,) + e[i + 1:]
            parts.setdefault(d, {})[e0] = c
        return {d: self._new(t) for d, t in parts.items()}

    def leading_coeff_in(self, i: int) -> MultiPoly:
        d = self.degree_in(i)
        i_terms = {e[:i] + (0,) + e[i + 1:]: c for e, c in self.terms.items() if e[i] == d}
        return self._new(i_terms)

    def derivative(self, i: int) -> MultiPoly:
        mul, fi = self.dom.mul, self.dom.from_int
        out = {}
        z = self.dom.is_zero
        for e, c in self.terms.items():
            if e[i]:
                v = mul(c, fi(e[i]))
                if not z(v):
                    out[e[:i] + (e[i] - 1,) + e[i + 1:]] = v
        return self._new(out)

    def evaluate(self, point: Sequence, dom=None):
        """Evaluate at raw values of ``dom`` (defaults to the coefficient domain)."""
        dom = dom or self.dom
        acc = dom.zero
        for e, c in self.terms.items():
            t = c if dom is self.dom else dom.convert(c)
            for v, a in zip(point, e):
                if a:
                    t = dom.mul(t, dom.pow(v, a))
            acc = dom.add(acc, t)
        return acc

    def substitute(self, mapping: dict) -> MultiPoly:
        """Substitute variables (by name) with polynomials in the same variable set."""
        idx = {self.vars.index(k): v for k, v in mapping.items()}
        result = MultiPoly.zero(self.dom, self.vars)
        cache: dict = {}
        for e, c in self.terms.items():
            keep = tuple(0 if j in idx else a for j, a in enumerate(e))
            term = MultiPoly(self.dom, self.vars, {keep: c}, clean=False)
            for j, a in enumerate(e):
                if j in idx and a:
                    key = (j, a)
                    if key not in cache:
                        cache[key] = idx[j] ** a
                    term = term * cache[key]
            result = result + term
        return result

    def exact_div(self, other: MultiPoly) -> MultiPoly:
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if other.is_constant():
            return self.scale(self.dom.inv(other.constant_coeff()))
        if len(other.terms) == 1:
            (eg, cg), = other.terms.items()
            inv = self.dom.inv(cg)
            out = {}
            mul = self.dom.mul
            for e, c in self.terms.items():
                d = tuple(a - b for a, b in zip(e, eg))
                if min(d) < 0:
                    raise InexactDivision("monomial does not divide")
                out[d] = mul(c, inv)
            return self._new(out)
        if not self.terms:
            return self
        if isinstance(self.dom, PrimeField):
            order = sorted(self.occurring() | other.occurring())
            try:
                return self._new(dense_exact_div_terms(self.terms, other.terms, order, len(self.vars), self.dom.p))
            except ArithmeticError:
                raise InexactDivision("divisor does not divide") from None
        lg = other.leading_exp()
        cg_inv = self.dom.inv(other.terms[lg])
        mul, sub, z = self.dom.mul, self.dom.sub, self.dom.is_zero
        rem = dict(self.terms)
        quo = {}
        other_items = list(other.terms.items())
        while rem:
            lr = max(rem, key=grlex_key)
            d = tuple(a - b for a, b in zip(lr, lg))
            if min(d) < 0:
                raise InexactDivision(f"leading term not divisible")
            c = mul(rem[lr], cg_inv)
            quo[d] = c
            for e, v in other_items:
                t = tuple(a + b for a, b in zip(e, d))
                nv = sub(rem.get(t, self.dom.zero), mul(v, c))
                if z(nv):
                    rem.pop(t, None)
                else:
                    rem[t] = nv
        return self._new(quo)

    def divides(self, other: MultiPoly) -> bool:
        try:
            other.exact_div(self)
            return True
        except InexactDivision:
            return False

    # -- conversions ----------------------------------------------------
    def extend_vars(self, variables: Sequence[str]) -> MultiPoly:
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.vars]
        n = len(variables)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for j, a in zip(pos, e):
                ne[j] = a
            out[tuple(ne)] = c
        return MultiPoly(self.dom, variables, out, clean=False)

    def restrict_vars(self, variables: Sequence[str]) -> MultiPoly:
        variables = tuple(variables)
        pos = [self.vars.index(v) for v in variables]
        drop = [j for j in range(len(self.vars)) if j not in pos]
        out = {}
        for e, c in self.terms.items():
            if any(e[j] for j in drop):
                raise ArityMismatch(f"polynomial involves variables outside {variables}")
            out[tuple(e[j] for j in pos)] = c
        return MultiPoly(self.dom, variables, out, clean=False)

    def map_coeffs(self, fn, dom=None) -> MultiPoly:
        dom = dom or self.dom
        return MultiPoly(dom, self.vars, {e: fn(c) for e, c in self.terms.items()})

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        return format_poly(self)


def _format_monomial(variables, e) -> str:
    parts = []
    for v, a in zip(variables, e):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts)


def format_poly(f: MultiPoly) -> str:
    if not f.terms:
        return "0"
    dom = f.dom
    out = []
    for e, c in f.sorted_terms():
        mono = _format_monomial(f.vars, e)
        neg = dom.is_negative_literal(c) if hasattr(dom, "is_negative_literal") else False
        if neg:
            c = dom.neg(c)
        cs = dom.to_str(c)
        compound = any(ch in cs for ch in "+- ") and not cs.startswith("(")
        if compound:
            cs = f"({cs})"
        if not mono:
            term = cs
        elif dom.is_one(c):
            term = mono
        else:
            term = f"{cs}*{mono}"
        if not out:
            out.append(f"-{term}" if neg else term)
        else:
            out.append(f" - {term}" if neg else f" + {term}")
    return "".join(out)


# -- gcd -------------------------------------------------------------------

def _monomial_gcd_exp(polys: Iterable[MultiPoly]) -> tuple:
    m = None
    for f in polys:
        for e in f.terms:
            m = e if m is None else tuple(min(a, b) for a, b in zip(m, e))
    return m


def _content_in(f: MultiPoly, i: int) -> MultiPoly:
    g = None
    for c in f.coeffs_in(i).values():
        g = c if g is None else multi_gcd(g, c)
        if g.is_constant():
            return MultiPoly.const(f.dom, f.vars, f.dom.one)
    return g


def _prem(a: MultiPoly, b: MultiPoly, i: int) -> MultiPoly:
    db = b.degree_in(i)
    lcb = b.leading_coeff_in(i)
    while a.terms and a.degree_in(i) >= db:
        da = a.degree_in(i)
        lca = a.leading_coeff_in(i)
        shift = tuple(da - db if j == i else 0 for j in range(len(a.vars)))
        a = lcb * a - (lca * b).mul_monomial(shift)
    return a


def multi_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic (grlex) gcd via primitive remainder sequences in the last occurring variable.

    Over a prime field the sequences run in a recursive dense representation.
    """
    f._check(g)
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    one = MultiPoly.const(f.dom, f.vars, f.dom.one)
    if f.is_constant() or g.is_constant():
        return one
    if f.is_monomial() or g.is_monomial():
        e = _monomial_gcd_exp([f, g])
        return MultiPoly(f.dom, f.vars, {e: f.dom.one}, clean=False)
    if f == g:
        return f.monic()
    # pull out the common monomial factor first; it keeps the PRS small
    mf, mg = _monomial_gcd_exp([f]), _monomial_gcd_exp([g])
    if any(mf) or any(mg):
        common = tuple(min(a, b) for a, b in zip(mf, mg))
        fr = f.exact_div(MultiPoly(f.dom, f.vars, {mf: f.dom.one}, clean=False))
        gr = g.exact_div(MultiPoly(g.dom, g.vars, {mg: g.dom.one}, clean=False))
        return multi_gcd(fr, gr).mul_monomial(common)
    if isinstance(f.dom, PrimeField):
        # the lowest-degree variable goes last, so it drives the remainder sequence
        order = sorted(f.occurring() | g.occurring(), key=lambda i: (-min(f.degree_in(i), g.degree_in(i)), i))
        return f._new(dense_gcd_terms(f.terms, g.terms, order, len(f.vars), f.dom.p)).monic()
    occ_f, occ_g = f.occurring(), g.occurring()
    i = max(occ_f | occ_g)
    if i not in occ_f:
        return multi_gcd(f, _content_in(g, i))
    if i not in occ_g:
        return multi_gcd(_content_in(f, i), g)
    cf, cg = _content_in(f, i), _content_in(g, i)
    c = multi_gcd(cf, cg)
    a, b = f.exact_div(cf), g.exact_div(cg)
    if a.degree_in(i) < b.degree_in(i):
        a, b = b, a
    while True:
        r = _prem(a, b, i)
        if r.is_zero():
            break
        if r.degree_in(i) == 0:
            return c.monic()
        a, b = b, r.exact_div(_content_in(r, i))
    pp = b.exact_div(_content_in(b, i))
    return (c * pp).monic()


def multi_lcm(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return (f * g).exact_div(multi_gcd(f, g)).monic()
