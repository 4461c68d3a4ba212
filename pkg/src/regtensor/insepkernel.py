"""Subfields of F = F_p(x_1..x_n) that contain B0 = F_p(x_1^(p^e_1), ..., x_n^(p^e_n)).

F is a B0-vector space with the monomial basis {x^r : 0 <= r_i < p^e_i}, and
a subfield containing B0 is a B0-subspace closed under multiplication.  All
field questions (degree, membership, intersection) therefore reduce to exact
linear algebra over B0 = F_p(u_1..u_n) with u_i = x_i^(p^e_i).

Rows are stored fraction-free: sparse maps from basis index to polynomials in
the u_i with the content divided out.  Rescaling by B0 never changes a span.
Elimination itself runs over the field B0 in fully reduced form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .exactscalar import GF
from .polyrat import MultiPoly, RatFunc, multi_gcd, multi_lcm, pth_power_test


class ContextMismatch(ValueError):
    pass


class NotASubfield(ValueError):
    pass


class InternalInconsistency(AssertionError):
    pass


class AmbientUnavailable(ValueError):
    pass


@dataclass(frozen=True)
class AmbientContext:
    """F_p(vars) viewed over B0 = F_p(v^(p^e) for v, e in zip(vars, exps))."""

    p: int
    vars: tuple
    exps: tuple
    ambient_vars: tuple
    monos: tuple = field(init=False, repr=False, compare=False)
    index: dict = field(init=False, repr=False, compare=False)
    u_vars: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.vars) != len(self.exps):
            raise ValueError("one exponent per variable")
        if not set(self.vars) <= set(self.ambient_vars):
            raise ValueError("context variables must be ambient variables")
        ranges = [range(self.p**e) for e in self.exps]
        monos = tuple(itertools.product(*ranges))
        object.__setattr__(self, "monos", monos)
        object.__setattr__(self, "index", {m: i for i, m in enumerate(monos)})
        object.__setattr__(
            self, "u_vars", tuple(f"{v}^{self.p**e}" if e else v for v, e in zip(self.vars, self.exps))
        )

    @classmethod
    def make(cls, p: int, ambient_vars: Sequence[str], exps: dict) -> AmbientContext:
        """Context over the variables in ``exps`` (ambient order) with their exponents."""
        ambient_vars = tuple(ambient_vars)
        vs = tuple(v for v in ambient_vars if v in exps)
        return cls(p, vs, tuple(exps[v] for v in vs), ambient_vars)

    @property
    def dom(self):
        return GF(self.p)

    @property
    def size(self) -> int:
        return len(self.monos)

    def u_poly(self, terms: dict) -> MultiPoly:
        return MultiPoly(self.dom, self.u_vars, terms, clean=False)

    def u_one(self) -> MultiPoly:
        return MultiPoly.const(self.dom, self.u_vars, 1)

    def b0_generators(self) -> list[RatFunc]:
        out = []
        for v, e in zip(self.vars, self.exps):
            out.append(RatFunc.var(self.dom, self.ambient_vars, v) ** (self.p**e))
        return out

    def describe(self) -> str:
        inner = ", ".join(self.u_vars)
        return f"F_{self.p}({inner})"


# -- element <-> row conversion ----------------------------------------------

def _split_exponent(ctx: AmbientContext, beta: tuple):
    r, q = [], []
    for b, e in zip(beta, ctx.exps):
        m = ctx.p**e
        r.append(b % m)
        q.append(b // m)
    return tuple(r), tuple(q)


def _restrict(ctx: AmbientContext, f: MultiPoly) -> MultiPoly:
    if f.vars == ctx.vars:
        return f
    try:
        return f.restrict_vars(ctx.vars)
    except ValueError as exc:
        raise ContextMismatch(f"element involves variables outside {ctx.vars}") from exc


def element_row(elem: RatFunc, ctx: AmbientContext):
    """Return (row, den) with elem = (sum_r row[r] x^r) / den, row entries in F_p[u]."""
    num = _restrict(ctx, elem.num)
    den = _restrict(ctx, elem.den)
    if den.is_monomial():
        (beta, c), = den.terms.items()
        gamma = tuple((-b) % (ctx.p**e) for b, e in zip(beta, ctx.exps))
        num = num.mul_monomial(gamma)
        dexp = tuple((b + g) // (ctx.p**e) for b, g, e in zip(beta, gamma, ctx.exps))
        den_u = ctx.u_poly({dexp: c})
    else:
        big_e = max(ctx.exps) if ctx.exps else 0
        q = ctx.p**big_e
        num = num * den ** (q - 1)
        den_q = den.frobenius(q)
        den_u = ctx.u_poly({tuple(b // (ctx.p**e) for b, e in zip(beta, ctx.exps)): c for beta, c in den_q.terms.items()})
    row: dict = {}
    for beta, c in num.terms.items():
        r, qq = _split_exponent(ctx, beta)
        i = ctx.index[r]
        row.setdefault(i, {})[qq] = c
    return {i: ctx.u_poly(t) for i, t in row.items()}, den_u


def decompose(elem: RatFunc, ctx: AmbientContext) -> list[RatFunc]:
    """Coordinates of elem over B0 in the monomial basis, as RatFuncs in the u-variables."""
    row, den = element_row(elem, ctx)
    out = []
    zero = ctx.u_poly({})
    for i in range(ctx.size):
        out.append(RatFunc(row.get(i, zero), den))
    return out


def row_to_element(row: dict, ctx: AmbientContext, den: MultiPoly | None = None) -> RatFunc:
    """Inverse of element_row: rebuild the ambient rational function."""
    av = ctx.ambient_vars
    pos = [av.index(v) for v in ctx.vars]
    dom = ctx.dom

    def lift(f: MultiPoly, shift=None) -> MultiPoly:
        terms = {}
        for qq, c in f.terms.items():
            e = [0] * len(av)
            for j, a, ee in zip(pos, qq, ctx.exps):
                e[j] += a * ctx.p**ee
            if shift is not None:
                for j, a in zip(pos, shift):
                    e[j] += a
            e = tuple(e)
            terms[e] = dom.add(terms.get(e, 0), c)
        return MultiPoly(dom, av, terms)

    num = MultiPoly.zero(dom, av)
    for i, f in row.items():
        num = num + lift(f, ctx.monos[i])
    d = lift(den) if den is not None else MultiPoly.const(dom, av, 1)
    return RatFunc(num, d)


def mul_rows(a: dict, b: dict, ctx: AmbientContext) -> dict:
    """Product of two row-encoded elements (up to the B0 scalars dropped from each)."""
    out: dict = {}
    moduli = [ctx.p**e for e in ctx.exps]
    for i, fa in a.items():
        ra = ctx.monos[i]
        for j, fb in b.items():
            rb = ctx.monos[j]
            r, carry = [], []
            for x, y, m in zip(ra, rb, moduli):
                s = x + y
                r.append(s % m)
                carry.append(s // m)
            k = ctx.index[tuple(r)]
            t = (fa * fb).mul_monomial(tuple(carry)) if any(carry) else fa * fb
            if k in out:
                out[k] = out[k] + t
            else:
                out[k] = t
    return {k: v for k, v in out.items() if not v.is_zero()}


class RowElement:
    """num_row / den with num_row entries and den in F_p[u]; exact, not normalized."""

    __slots__ = ("row", "den")

    def __init__(self, row: dict, den: MultiPoly):
        self.row = row
        self.den = den


class RowField:
    """F_p(vars) as a field whose elements are RowElements over B0.

    Coordinates stay of low degree in the u-variables, so long sums and products
    avoid the large gcds that ambient rational functions would need.
    """

    def __init__(self, ctx: AmbientContext):
        self.ctx = ctx
        self.one = RowElement({0: ctx.u_one()}, ctx.u_one())
        self.zero = RowElement({}, ctx.u_one())

    def of(self, elem: RatFunc) -> RowElement:
        row, den = element_row(elem, self.ctx)
        return self._reduce(row, den)

    def to_ratfunc(self, a: RowElement) -> RatFunc:
        return row_to_element(a.row, self.ctx, a.den)

    def is_zero(self, a: RowElement) -> bool:
        return not a.row

    def neg(self, a: RowElement) -> RowElement:
        return RowElement({i: -f for i, f in a.row.items()}, a.den)

    def add(self, a: RowElement, b: RowElement) -> RowElement:
        if not a.row:
            return b
        if not b.row:
            return a
        if a.den == b.den:
            return self._reduce(_add_rows(a.row, b.row), a.den)
        g = multi_gcd(a.den, b.den)
        fa, fb = b.den.exact_div(g), a.den.exact_div(g)
        row = _add_rows(_scale_row(a.row, fa), _scale_row(b.row, fb))
        return self._reduce(row, a.den * fa)

    def mul(self, a: RowElement, b: RowElement) -> RowElement:
        if not a.row or not b.row:
            return self.zero
        return self._reduce(mul_rows(a.row, b.row, self.ctx), a.den * b.den)

    def _reduce(self, row: dict, den: MultiPoly) -> RowElement:
        if not row:
            return self.zero
        if not den.is_constant():
            g = den
            for f in row.values():
                g = multi_gcd(g, f)
                if g.is_constant():
                    break
            if not g.is_constant():
                row = {i: f.exact_div(g) for i, f in row.items()}
                den = den.exact_div(g)
        c = den.leading_coeff()
        if c != 1:
            inv = den.dom.inv(c)
            row = {i: f.scale(inv) for i, f in row.items()}
            den = den.scale(inv)
        return RowElement(row, den)


def _add_rows(a: dict, b: dict) -> dict:
    out = dict(a)
    for i, f in b.items():
        v = out[i] + f if i in out else f
        if v.is_zero():
            out.pop(i, None)
        else:
            out[i] = v
    return out


def _scale_row(row: dict, f: MultiPoly) -> dict:
    return {i: v * f for i, v in row.items()}


# -- rows and echelon forms over B0 ---------------------------------------------

def _content(row: dict) -> MultiPoly | None:
    # smallest entries first: the running gcd usually collapses to a constant within a step or two
    entries = sorted(row.values(), key=lambda f: (f.total_degree(), len(f.terms)))
    g = None
    for f in entries:
        if f.is_constant():
            return None
        g = f if g is None else multi_gcd(g, f)
        if g.is_constant():
            return None
    return g


def normalize_row(row: dict) -> dict:
    """Divide out the content and make the pivot entry monic."""
    if not row:
        return row
    g = _content(row)
    if g is not None:
        row = {k: v.exact_div(g) for k, v in row.items()}
    piv = min(row)
    lc = row[piv].leading_coeff()
    dom = row[piv].dom
    if not dom.is_one(lc):
        inv = dom.inv(lc)
        row = {k: v.scale(inv) for k, v in row.items()}
    return row


def _fraction_free(row: dict) -> dict:
    """Scale a row of RatFunc entries to a normalized row of polynomials."""
    return normalize_row(_clear_denominators(row))


class Echelon:
    """Incremental reduced echelon basis over B0, keyed by pivot column.

    Internally every row has pivot entry 1 and zeros in all other pivot columns, so
    entries stay as small as the subspace allows; a fraction-free semi-echelon form
    lets them grow with every elimination.  ``rows`` exposes the normalized
    fraction-free view that the rest of the module works with.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, dict] = {}
        self._view: dict[int, dict] | None = None

    @classmethod
    def from_reduced(cls, ncols: int, rows: Iterable[dict]) -> Echelon:
        """Wrap rows that are already reduced against each other (such as ``rref`` output)."""
        e = cls(ncols)
        for r in rows:
            piv = min(r)
            inv = RatFunc(r[piv]).inverse()
            e._rows[piv] = {k: RatFunc(v) * inv for k, v in r.items()}
        return e

    def __len__(self):
        return len(self._rows)

    @property
    def rows(self) -> dict[int, dict]:
        if self._view is None:
            self._view = {c: _fraction_free(r) for c, r in self._rows.items()}
        return self._view

    def _reduce(self, v: dict) -> dict:
        out = {k: (x if isinstance(x, RatFunc) else RatFunc(x)) for k, x in v.items()}
        # the stored rows are fully reduced, so one pass over the pivots present suffices
        for col in [c for c in sorted(out) if c in self._rows]:
            c = out.pop(col)
            for k, x in self._rows[col].items():
                if k == col:
                    continue
                t = out[k] - c * x if k in out else -(c * x)
                if t.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = t
        return out

    def reduce(self, v: dict) -> dict:
        """Residual of v modulo the span, as a normalized fraction-free row ({} when v lies in it)."""
        r = self._reduce(v)
        return _fraction_free(r) if r else r

    def add(self, v: dict) -> bool:
        r = self._reduce(v)
        if not r:
            return False
        piv = min(r)
        inv = r[piv].inverse()
        r = {k: x * inv for k, x in r.items()}
        for row in self._rows.values():
            c = row.get(piv)
            if c is None:
                continue
            del row[piv]
            for k, x in r.items():
                if k == piv:
                    continue
                t = row[k] - c * x if k in row else -(c * x)
                if t.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = t
        self._rows[piv] = r
        self._view = None
        return True

    def rref(self) -> tuple:
        return tuple(_freeze(self.rows[c]) for c in sorted(self._rows))


def _freeze(row: dict) -> tuple:
    return tuple(sorted(row.items()))


# -- subfields -----------------------------------------------------------------

@dataclass(frozen=True)
class SubfieldBasis:
    """A subfield between B0 and F, as its canonical reduced echelon B0-basis."""

    ctx: AmbientContext
    rows: tuple

    @property
    def dim(self) -> int:
        return len(self.rows)

    def row_dicts(self) -> list[dict]:
        return [dict(r) for r in self.rows]

    def elements(self) -> list[RatFunc]:
        return [row_to_element(dict(r), self.ctx) for r in self.rows]

    def echelon(self) -> Echelon:
        return Echelon.from_reduced(self.ctx.size, (dict(r) for r in self.rows))

    def __contains__(self, elem: RatFunc) -> bool:
        return member(elem, self)

    def describe(self) -> list[str]:
        return [str(x) for x in self.elements()]


def _row_size(row: dict) -> tuple:
    return (len(row), max(v.total_degree() for v in row.values()))


def closure_of_rows(rows: Iterable[dict], ctx: AmbientContext) -> SubfieldBasis:
    """Smallest subfield containing B0 and the elements encoded by ``rows``.

    Built as a tower E <- E(g) one generator at a time.  Every element of F is purely
    inseparable over B0, so [E(g):E] is the least p^m with g^(p^m) in E, and the
    products b*g^i (b in a basis of E, i below that degree) form a basis of E(g).
    Simple generators go first, which keeps the intermediate coordinates small.
    """
    gens = sorted((normalize_row(dict(r)) for r in rows if r), key=_row_size)
    one = {0: ctx.u_one()}
    ech = Echelon(ctx.size)
    ech.add(one)
    basis = [one]
    for g in gens:
        d = _degree_over(g, ech, ctx)
        if d == 1:
            continue
        if len(basis) * d == ctx.size:
            return full_basis(ctx)
        new = []
        gi = g
        for i in range(1, d):
            if i > 1:
                gi = normalize_row(mul_rows(gi, g, ctx))
            for b in basis:
                v = normalize_row(mul_rows(b, gi, ctx))
                if not ech.add(v):
                    raise InternalInconsistency("tower basis products are linearly dependent")
                new.append(v)
        basis.extend(new)
    if len(basis) == ctx.size:
        return full_basis(ctx)
    return SubfieldBasis(ctx, ech.rref())


def _degree_over(g: dict, ech: Echelon, ctx: AmbientContext) -> int:
    """[E(g):E] for the subfield E spanned by ``ech``."""
    d, h = 1, g
    while ech.reduce(h):
        hp = h
        for _ in range(ctx.p - 1):
            hp = mul_rows(hp, h, ctx)
        h = normalize_row(hp)
        d *= ctx.p
        if d > ctx.size:
            raise InternalInconsistency("element is not purely inseparable over the subfield")
    return d


def subalgebra_closure(generators: Sequence[RatFunc], ctx: AmbientContext) -> SubfieldBasis:
    """Smallest subfield containing B0 and the generators."""
    rows = [element_row(g, ctx)[0] for g in generators]
    return closure_of_rows(rows, ctx)


def full_basis(ctx: AmbientContext) -> SubfieldBasis:
    one = ctx.u_one()
    return SubfieldBasis(ctx, tuple(((i, one),) for i in range(ctx.size)))


def member(elem: RatFunc, basis: SubfieldBasis) -> bool:
    try:
        row, _ = element_row(elem, basis.ctx)
    except ContextMismatch:
        return False
    if not row:
        return True
    return not basis.echelon().reduce(row)


def intersect(b1: SubfieldBasis, b2: SubfieldBasis) -> SubfieldBasis:
    """Zassenhaus intersection of two B0-subspaces; the result is again a subfield."""
    if b1.ctx != b2.ctx:
        raise ContextMismatch("subfields live in different contexts")
    n = b1.ctx.size
    ech = Echelon(2 * n)
    for r in b1.rows:
        d = dict(r)
        ech.add({**d, **{k + n: v for k, v in d.items()}})
    for r in b2.rows:
        ech.add(dict(r))
    inter = Echelon(n)
    for col, row in ech.rows.items():
        if col >= n:
            inter.add({k - n: v for k, v in row.items()})
    return SubfieldBasis(b1.ctx, inter.rref())


def is_subfield_of(small: SubfieldBasis, large: SubfieldBasis) -> bool:
    if small.ctx != large.ctx:
        raise ContextMismatch("subfields live in different contexts")
    ech = large.echelon()
    return all(not ech.reduce(dict(r)) for r in small.rows)


def relative_degree(small: SubfieldBasis, large: SubfieldBasis) -> int:
    if not is_subfield_of(small, large):
        raise NotASubfield("first argument is not contained in the second")
    if large.dim % small.dim:
        raise InternalInconsistency(f"dimension {large.dim} not divisible by {small.dim}")
    return large.dim // small.dim


def solve_coordinates(target: RatFunc, spanning: Sequence[RatFunc], ctx: AmbientContext):
    """Find B0-coefficients c_i (RatFuncs in u) with target = sum c_i * spanning[i].

    The spanning elements must be B0-linearly independent; returns None when the
    target is outside their span.
    """
    from .linalg import solve_linear

    rows = []
    for s in spanning:
        r, d = element_row(s, ctx)
        rows.append({k: RatFunc(v, d) for k, v in r.items()})
    tr, td = element_row(target, ctx)
    rhs = {k: RatFunc(v, td) for k, v in tr.items()}
    from .polyrat import RatFuncField

    F = RatFuncField(ctx.dom, ctx.u_vars)
    return solve_linear(F, rows, rhs, ctx.size)


def b0_to_ambient(c: RatFunc, ctx: AmbientContext) -> RatFunc:
    """Map a B0 coefficient written in the u-variables back into the ambient field."""
    av = ctx.ambient_vars
    pos = [av.index(v) for v in ctx.vars]

    def lift(f: MultiPoly) -> MultiPoly:
        terms = {}
        for qq, coef in f.terms.items():
            e = [0] * len(av)
            for j, a, ee in zip(pos, qq, ctx.exps):
                e[j] = a * ctx.p**ee
            terms[tuple(e)] = coef
        return MultiPoly(ctx.dom, av, terms, clean=False)

    return RatFunc(lift(c.num), lift(c.den), normalized=True)


# -- descent to fewer variables ---------------------------------------------------

def _clear_denominators(vec: dict) -> dict:
    """Scale a vector of RatFuncs to polynomial entries."""
    den = reduce(multi_lcm, [x.den for x in vec.values()])
    return {k: (x.num * den.exact_div(x.den)) for k, x in vec.items()}


def descend(basis: SubfieldBasis, keep_vars) -> SubfieldBasis:
    """basis ∩ F_p(keep_vars), for a context whose other variables have exponent 0.

    Membership in a subspace W is tested against its annihilator; expanding the
    annihilator equations in the dropped variables gives equations over the
    smaller p-power base, whose solutions are exactly the vectors of W that do
    not involve those variables.
    """
    from .linalg import nullspace
    from .polyrat import RatFuncField

    ctx = basis.ctx
    keep = [i for i, v in enumerate(ctx.vars) if v in set(keep_vars)]
    drop = [i for i in range(len(ctx.vars)) if i not in keep]
    if not drop:
        return basis
    if any(ctx.exps[i] for i in drop):
        raise ContextMismatch("only variables entering with exponent 0 can be descended")
    small = AmbientContext.make(ctx.p, ctx.ambient_vars, {ctx.vars[i]: ctx.exps[i] for i in keep})
    Fbig = RatFuncField(ctx.dom, ctx.u_vars)
    Fsmall = RatFuncField(ctx.dom, small.u_vars)
    rows = [{k: RatFunc(v) for k, v in r} for r in basis.rows]
    colmap = {i: small.index[tuple(m[j] for j in keep)] for i, m in enumerate(ctx.monos)}
    constraints = []
    for n in nullspace(Fbig, rows, ctx.size):
        split: dict = {}
        for col, poly in _clear_denominators(n).items():
            for beta, c in poly.terms.items():
                tkey = tuple(beta[j] for j in drop)
                kbeta = tuple(beta[j] for j in keep)
                split.setdefault(tkey, {}).setdefault(colmap[col], {})[kbeta] = c
        for entries in split.values():
            constraints.append({col: RatFunc(small.u_poly(t)) for col, t in entries.items()})
    sols = nullspace(Fsmall, constraints, small.size)
    out_rows = []
    for s in sols:
        out_rows.append({k: v.restrict_vars(small.u_vars) if v.vars != small.u_vars else v
                         for k, v in _clear_denominators(s).items() if not v.is_zero()})
    return closure_of_rows(out_rows, small)


def restrict_field(spec: AmbientSpec, keep_vars) -> SubfieldBasis:
    """spec's field intersected with F_p(keep_vars), computed in spec's own context."""
    return descend(basis_of(spec, joint_context([spec])), keep_vars)


# -- ambient subfield presentations ------------------------------------------------

@dataclass(frozen=True)
class AmbientSpec:
    """F_p(generators) inside F_p(ambient_vars), certified to contain B0(support)."""

    p: int
    ambient_vars: tuple
    support: tuple  # ((var, exponent), ...) in ambient order
    generators: tuple  # RatFuncs

    @property
    def support_dict(self) -> dict:
        return dict(self.support)

    def vars(self) -> set:
        return {v for v, _ in self.support}

    def with_generators(self, gens: Sequence[RatFunc], new_support: dict | None = None) -> AmbientSpec:
        sup = dict(self.support)
        if new_support:
            sup.update(new_support)
        ordered = tuple((v, sup[v]) for v in self.ambient_vars if v in sup)
        return AmbientSpec(self.p, self.ambient_vars, ordered, tuple(self.generators) + tuple(gens))


def certify_base(p: int, ambient_vars: Sequence[str], generators: Sequence[RatFunc]) -> AmbientSpec:
    """Read off B0 from generators of the form c*v^(p^e); other generators must stay inside."""
    ambient_vars = tuple(ambient_vars)
    sup: dict = {}
    for g in generators:
        if g.den.is_one() and g.num.is_monomial():
            (e, _c), = g.num.terms.items()
            nz = [(i, a) for i, a in enumerate(e) if a]
            if len(nz) == 1:
                i, a = nz[0]
                k, q = 0, 1
                while q < a:
                    q *= p
                    k += 1
                if q == a:
                    v = ambient_vars[i]
                    sup[v] = min(sup.get(v, k), k)
    for g in generators:
        extra = g.occurring_vars() - set(sup)
        if extra:
            raise AmbientUnavailable(
                f"cannot certify that the base contains a p-power of {sorted(extra)}; "
                "list generators of the form v^(p^e) for every variable"
            )
    ordered = tuple((v, sup[v]) for v in ambient_vars if v in sup)
    return AmbientSpec(p, ambient_vars, ordered, tuple(generators))


def joint_context(specs: Sequence[AmbientSpec], extra: Iterable[RatFunc] = ()) -> AmbientContext:
    """Union of supports with the largest exponent per variable."""
    p = specs[0].p
    av = specs[0].ambient_vars
    exps: dict = {}
    for s in specs:
        if s.ambient_vars != av or s.p != p:
            raise ContextMismatch("fields live in different ambients")
        for v, e in s.support:
            exps[v] = max(exps.get(v, 0), e)
    for g in extra:
        missing = g.occurring_vars() - set(exps)
        if missing:
            raise ContextMismatch(f"element involves {sorted(missing)} outside the supports")
    return AmbientContext.make(p, av, exps)


_BASIS_CACHE: dict = {}


def basis_of(spec: AmbientSpec, ctx: AmbientContext) -> SubfieldBasis:
    """spec's field (lifted by the B0 of variables outside its support) as a SubfieldBasis."""
    key = (spec.generators, ctx)
    hit = _BASIS_CACHE.get(key)
    if hit is None:
        for v, e in spec.support:
            if v not in ctx.vars or ctx.exps[ctx.vars.index(v)] < e:
                raise ContextMismatch(f"context too small for variable {v}")
        hit = subalgebra_closure(list(spec.generators), ctx)
        if len(_BASIS_CACHE) > 4096:
            _BASIS_CACHE.clear()
        _BASIS_CACHE[key] = hit
    return hit


def pth_root_in(a: RatFunc, spec: AmbientSpec):
    """(root, in_field): the unique p-th root of a in the ambient and whether it lies in spec."""
    r = pth_power_test(a)
    if r is None:
        return None, False
    ctx = joint_context([spec], [r])
    return r, member(r, basis_of(spec, ctx))


def insep_exponent(g: RatFunc, spec: AmbientSpec) -> int:
    """Smallest m >= 0 with g^(p^m) in the field described by spec."""
    ctx = joint_context([spec], [g])
    basis = basis_of(spec, ctx)
    bound = max(ctx.exps) if ctx.exps else 0
    x = g
    for m in range(bound + 1):
        if member(x, basis):
            return m
        x = x.frobenius(spec.p)
    raise InternalInconsistency("p-power bound exceeded; support certification is broken")
