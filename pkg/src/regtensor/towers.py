"""Finitely presented field extensions: towers of adjunctions over a base.

Two presentations share one ``FieldTower`` type:

* generic towers over QQ or F_p.  Transcendental steps are gathered into a
  coefficient field C = base(t_1, ..., t_r) and each algebraic step becomes a
  ``SimpleExtension`` level on top of C.  Elements are nested tuples.
* ambient towers: subfields of F_p(x_1, ..., x_n) containing a certified
  p-power base.  Elements are ambient rational functions and field questions
  go through the purely inseparable kernel.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from . import factoracle as fo
from . import insepkernel as ik
from .exactscalar import QQ, GF
from .fieldext import SimpleExtension
from .linalg import first_dependency
from .polyrat import RatFunc, RatFuncField, UniPoly, binomial_data, is_separable, pth_power_test
from .polyrat.parse import evaluate, parse_expr


class ReducibleMinPoly(ValueError):
    def __init__(self, message: str, factor=None):
        super().__init__(message)
        self.factor = factor


class InfiniteDegree(ValueError):
    pass


class NotAPrefix(ValueError):
    pass


class InvalidStep(ValueError):
    pass


class UnknownName(KeyError):
    def __str__(self):
        return f"unknown name {self.args[0]!r}"


AmbientUnavailable = ik.AmbientUnavailable


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "infinite"

    def __mul__(self, other):
        return self

    __rmul__ = __mul__


INF = _Infinity()


class StepKind(str, enum.Enum):
    TRANSCENDENTAL = "transcendental"
    ALGEBRAIC = "algebraic"


@dataclass(frozen=True, eq=False)
class Step:
    kind: StepKind
    name: str
    minpoly: Optional[UniPoly] = None  # monic, over the field below this step
    cert: Optional[fo.IrreducibilityCert] = None
    element: Optional[RatFunc] = None  # ambient towers: the generator inside F

    @property
    def degree(self):
        return self.minpoly._deg() if self.minpoly is not None else INF

    def _key(self):
        return (self.kind, self.name, str(self.minpoly), self.element)

    def __eq__(self, other):
        return isinstance(other, Step) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def describe(self) -> str:
        if self.kind is StepKind.TRANSCENDENTAL:
            return f"transcendental {self.name}"
        return f"root {self.name} of {self.minpoly}"


def Transcendental(name: str) -> Step:
    return Step(StepKind.TRANSCENDENTAL, name)


@dataclass(frozen=True)
class Root:
    """The base field k: a prime field, or an ambient subfield F_p(generators)."""

    dom: object
    ambient: Optional[ik.AmbientSpec] = None
    name: str = "k"

    def describe(self) -> str:
        if self.ambient is None:
            return repr(self.dom)
        gens = ", ".join(str(g) for g in self.ambient.generators)
        return f"F_{self.ambient.p}({gens}) inside F_{self.ambient.p}({', '.join(self.ambient.ambient_vars)})"


def prime_root(dom, name="k") -> Root:
    return Root(dom, None, name)


def ambient_root(p: int, ambient_vars: Sequence[str], generators: Sequence[RatFunc], name="k") -> Root:
    spec = ik.certify_base(p, ambient_vars, generators)
    return Root(GF(p), spec, name)


# -----------------------------------------------------------------------------
# the tower
# -----------------------------------------------------------------------------

class FieldTower:
    """An immutable tower root -> step_1 -> ... -> step_n."""

    def __init__(self, root: Root, steps: Sequence[Step] = (), name: str | None = None):
        self.root = root
        self.steps = tuple(steps)
        self.name = name or root.name

    def __repr__(self):
        return f"FieldTower({self.name}: {self.describe()})"

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self.root == other.root and self.steps == other.steps

    def __hash__(self):
        return hash((self.root, self.steps))

    def renamed(self, name: str) -> FieldTower:
        return FieldTower(self.root, self.steps, name)

    # -- basic structure ---------------------------------------------------
    @property
    def is_ambient(self) -> bool:
        return self.root.ambient is not None

    @property
    def characteristic(self) -> int:
        return self.root.dom.characteristic

    @property
    def prime(self):
        return self.root.dom

    @property
    def transcendentals(self) -> tuple:
        return tuple(s.name for s in self.steps if s.kind is StepKind.TRANSCENDENTAL)

    @property
    def algebraic_steps(self) -> tuple:
        return tuple(s for s in self.steps if s.kind is StepKind.ALGEBRAIC)

    def step_names(self) -> set:
        return {s.name for s in self.steps}

    def prefix(self, n: int) -> FieldTower:
        return FieldTower(self.root, self.steps[:n], f"{self.name}[:{n}]")

    def base_tower(self) -> FieldTower:
        return FieldTower(self.root, (), self.root.name)

    def is_prefix_of(self, other: FieldTower) -> bool:
        return self.root == other.root and other.steps[: len(self.steps)] == self.steps

    def _suffix(self, over: FieldTower | None):
        if over is None:
            return self.steps
        if not over.is_prefix_of(self):
            raise NotAPrefix(f"{over.name} is not a prefix of {self.name}")
        return self.steps[len(over.steps):]

    def degree(self, over: FieldTower | None = None):
        deg = 1
        for s in self._suffix(over):
            if s.kind is StepKind.TRANSCENDENTAL:
                return INF
            deg *= s.degree
        return deg

    def td(self, over: FieldTower | None = None) -> int:
        return sum(1 for s in self._suffix(over) if s.kind is StepKind.TRANSCENDENTAL)

    def describe(self) -> str:
        parts = [self.root.name]
        for s in self.steps:
            if s.kind is StepKind.TRANSCENDENTAL:
                parts.append(f"({s.name})")
            elif s.element is not None:
                shown = s.name if s.name == str(s.element) else f"{s.name} = {s.element}"
                parts.append(f"({shown})")
            else:
                parts.append(f"({s.name} : {s.minpoly} = 0)")
        return "".join(parts)

    # -- generic field construction -----------------------------------------
    @cached_property
    def coefficient_field(self):
        if self.is_ambient:
            return RatFuncField(self.prime, self.root.ambient.ambient_vars)
        if self.transcendentals:
            return RatFuncField(self.prime, self.transcendentals)
        return self.prime

    @cached_property
    def levels(self) -> list:
        """levels[j] is the field after j algebraic steps (generic towers)."""
        if self.is_ambient:
            return [self.coefficient_field]
        out = [self.coefficient_field]
        for j, s in enumerate(self.algebraic_steps):
            src = self._step_source(s)
            coeffs = [self._lift_from(src, c) for c in s.minpoly.coeffs]
            out.append(SimpleExtension(out[-1], UniPoly(out[-1], coeffs, s.minpoly.var), s.name))
        return out

    def _step_source(self, step: Step) -> FieldTower:
        i = self.steps.index(step)
        return self.prefix(i)

    @property
    def field(self):
        return self.levels[-1]

    def _lift_from(self, src: FieldTower, x):
        """Embed an element of a prefix tower's field into this tower's field at the same level."""
        if src.coefficient_field == self.coefficient_field:
            return x
        C = self.coefficient_field
        depth = len(src.algebraic_steps)

        def rec(v, d):
            if d == 0:
                if isinstance(v, RatFunc):
                    return v.extend_vars(C.vars)
                return C.convert(v)
            return tuple(rec(c, d - 1) for c in v)

        return rec(x, depth)

    def wrap(self, x, level: int):
        """Element of levels[level] viewed in the top field."""
        for L in self.levels[level + 1:]:
            x = (x,) + (L.base.zero,) * (L.d - 1)
        return x

    def embed(self, sub: FieldTower, x):
        """Element of a prefix tower's field viewed in this tower's field."""
        if self.is_ambient:
            return x
        if not sub.is_prefix_of(self):
            raise NotAPrefix(f"{sub.name} is not a prefix of {self.name}")
        return self.wrap(self._lift_from(sub, x), len(sub.algebraic_steps))

    def flatten(self, x) -> dict:
        """Top-field element as {exponents of algebraic generators: C-coefficient}."""
        C = self.coefficient_field
        n = len(self.algebraic_steps)

        def rec(v, d):
            if d == 0:
                return {(): v} if not C.is_zero(v) else {}
            out = {}
            for t, c in enumerate(v):
                for e, coef in rec(c, d - 1).items():
                    out[e + (t,)] = coef
            return out

        return rec(x, n)

    def unflatten(self, mono: dict, level: int | None = None):
        n = len(self.algebraic_steps) if level is None else level
        C = self.coefficient_field
        degs = [s.degree for s in self.algebraic_steps[:n]]

        def rec(d, prefix_filter):
            if d == 0:
                return prefix_filter.get((), C.zero)
            out = []
            for t in range(degs[d - 1]):
                sub = {e[:-1]: c for e, c in prefix_filter.items() if e[-1] == t}
                out.append(rec(d - 1, sub))
            return tuple(out)

        return rec(n, mono)

    def gen(self, name: str):
        """The element called ``name`` (a transcendental, a step generator, or an ambient variable)."""
        if self.is_ambient:
            F = self.coefficient_field
            for s in self.steps:
                if s.name == name and s.element is not None:
                    return s.element
            if name in F.vars:
                return F.var(name)
            raise UnknownName(name)
        if name in self.transcendentals:
            return self.wrap(self.coefficient_field.var(name), 0)
        for j, s in enumerate(self.algebraic_steps):
            if s.name == name:
                return self.wrap(self.levels[j + 1].gen(), j + 1)
        raise UnknownName(name)

    def names(self) -> list[str]:
        if self.is_ambient:
            return list(self.coefficient_field.vars) + [s.name for s in self.algebraic_steps if s.name not in self.coefficient_field.vars]
        return list(self.transcendentals) + [s.name for s in self.algebraic_steps]

    def parse(self, text: str):
        return evaluate(parse_expr(text), _ElementAlgebra(self))

    def to_str(self, x) -> str:
        if self.is_ambient:
            return str(x)
        return format_element(self, x)

    # -- ambient view --------------------------------------------------------
    def ambient_spec(self) -> ik.AmbientSpec:
        if not self.is_ambient:
            raise AmbientUnavailable(f"{self.name} has no ambient presentation")
        spec = self.root.ambient
        sup = dict(spec.support)
        gens = list(spec.generators)
        for s in self.steps:
            if s.kind is StepKind.TRANSCENDENTAL:
                sup[s.name] = 0
                gens.append(self.coefficient_field.var(s.name))
            else:
                gens.append(s.element)
        ordered = tuple((v, sup[v]) for v in spec.ambient_vars if v in sup)
        return ik.AmbientSpec(spec.p, spec.ambient_vars, ordered, tuple(gens))

    def contains(self, x) -> bool:
        """Membership of an ambient element (ambient towers only)."""
        spec = self.ambient_spec()
        extra = x.occurring_vars() - spec.vars()
        if extra:
            return False
        ctx = ik.joint_context([spec])
        return ik.member(x, ik.basis_of(spec, ctx))

    # -- oracle view ---------------------------------------------------------
    @cached_property
    def mq_model(self):
        """Multiquadratic model of a generic characteristic-0 algebraic tower, or None."""
        if self.is_ambient or self.characteristic != 0 or self.transcendentals:
            return None
        return MQModel.from_tower(self)

    def view(self) -> fo.FieldView:
        if self.is_ambient:
            spec = self.ambient_spec()
            roots = fo.PthRootView(
                spec.p, self.coefficient_field, pth_power_test, self.contains, self.name
            )
            return fo.FieldView("ambient", self.coefficient_field, roots=roots, label=self.name)
        if self.characteristic and not self.transcendentals:
            return fo.finite_view(self.field)
        if self.transcendentals and not self.algebraic_steps:
            return fo.ratfunc_view(self.field)
        model = self.mq_model
        if model is not None:
            return model.view(self.field)
        return fo.FieldView("other", self.field, label=self.name)


class _ElementAlgebra:
    def __init__(self, tower: FieldTower):
        self.t = tower
        self.F = tower.field

    def const(self, n):
        return self.F.from_int(n)

    def name(self, s):
        return self.t.gen(s)

    def add(self, a, b):
        return self.F.add(a, b)

    def sub(self, a, b):
        return self.F.sub(a, b)

    def mul(self, a, b):
        return self.F.mul(a, b)

    def div(self, a, b):
        return self.F.div(a, b)

    def neg(self, a):
        return self.F.neg(a)

    def pow(self, a, n):
        return self.F.pow(a, n)


class _UniPolyAlgebra:
    """Parse ``X^2 - a`` with coefficients drawn from a tower."""

    def __init__(self, tower: FieldTower, var="X"):
        self.t = tower
        self.F = tower.field
        self.var = var

    def _c(self, c):
        return UniPoly(self.F, [c], self.var)

    def const(self, n):
        return self._c(self.F.from_int(n))

    def name(self, s):
        if s == self.var:
            return UniPoly.x(self.F, self.var)
        return self._c(self.t.gen(s))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if not b.is_constant() or b.is_zero():
            raise ValueError("only division by nonzero constants is allowed in a polynomial")
        return a.scale(self.F.inv(b.coeff(0)))

    def neg(self, a):
        return -a

    def pow(self, a, n):
        return a**n


def parse_unipoly(tower: FieldTower, text: str, var: str = "X") -> UniPoly:
    return evaluate(parse_expr(text), _UniPolyAlgebra(tower, var))


def format_element(tower: FieldTower, x) -> str:
    C = tower.coefficient_field
    names = [s.name for s in tower.algebraic_steps]
    mono = tower.flatten(x)
    if not mono:
        return "0"
    parts = []
    for e in sorted(mono, key=lambda e: (sum(e), e), reverse=True):
        c = mono[e]
        m = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        neg = C.is_negative_literal(c)
        if neg:
            c = C.neg(c)
        cs = C.to_str(c)
        if m and any(ch in cs for ch in "+- ") and not cs.startswith("("):
            cs = f"({cs})"
        t = cs if not m else (m if C.is_one(c) else f"{cs}*{m}")
        if not parts:
            parts.append(f"-{t}" if neg else t)
        else:
            parts.append(f" - {t}" if neg else f" + {t}")
    return "".join(parts)


# -----------------------------------------------------------------------------
# multiquadratic model (characteristic 0, quadratic steps with rational coefficients)
# -----------------------------------------------------------------------------

class MQModel:
    """Identify a nested field with Q(sqrt d_1, ..., sqrt d_n).

    gen_images[j]: the j-th level generator as MultiQuadField coordinates.
    sqrt_elems[i]: sqrt(d_i) as an element of the nested field.
    """

    def __init__(self, mq: fo.MultiQuadField, gen_images: list, sqrt_elems: list, levels: list):
        self.mq = mq
        self.gen_images = gen_images
        self.sqrt_elems = sqrt_elems
        self.levels = levels

    @classmethod
    def from_tower(cls, tower: FieldTower) -> Optional[MQModel]:
        mq = fo.MultiQuadField(())
        model = cls(mq, [], [], [tower.levels[0]])
        for j, s in enumerate(tower.algebraic_steps):
            f = s.minpoly
            if f._deg() != 2:
                return None
            level = tower.levels[j + 1]
            lower = tower.levels[j]
            b = _rational_of(lower, f.coeff(1), j)
            c = _rational_of(lower, f.coeff(0), j)
            if b is None or c is None:
                return None
            model = model.extend_by_quadratic(level, b, c)
            if model is None:
                return None
        return model

    def extend_by_quadratic(self, level: SimpleExtension, b, c) -> Optional[MQModel]:
        """Add a level whose generator is a root of X^2 + b X + c (b, c rational)."""
        D = Fraction(b) ** 2 - 4 * Fraction(c)
        d, q = fo.rational_squarefree(D)
        try:
            mq2 = self.mq.adjoin(d)
        except fo.BadGenerators:
            return None
        imgs = [self.mq.embed(g, mq2) for g in self.gen_images]
        # generator = (-b + q sqrt d) / 2
        root = list(mq2.zero)
        root[0] = Fraction(-b, 2) if isinstance(b, int) else -Fraction(b) / 2
        root[1 << (mq2.n - 1)] = Fraction(q) / 2
        imgs.append(tuple(root))
        # sqrt d = (2*gen + b) / q, written in the new level
        wrap_prev = [self._wrap(x, level) for x in self.sqrt_elems]
        B = level.base
        two_gen_plus_b = level.add(level.scale(level.gen(), B.from_int(2)), level.convert(_const_in(B, b)))
        new_sqrt = level.scale(two_gen_plus_b, _const_in(B, 1 / Fraction(q)))
        return MQModel(mq2, imgs, wrap_prev + [new_sqrt], self.levels + [level])

    @staticmethod
    def _wrap(x, level: SimpleExtension):
        return (x,) + (level.base.zero,) * (level.d - 1)

    def to_mq(self, x):
        """Nested top-level element -> MQ coordinates (Horner per level)."""
        def rec(v, d):
            if d == 0:
                return self.mq.convert(Fraction(v))
            acc = self.mq.zero
            g = self.gen_images[d - 1]
            for c in reversed(v):
                acc = self.mq.add(self.mq.mul(acc, g), rec(c, d - 1))
            return acc

        return rec(x, len(self.levels) - 1)

    def from_mq(self, v):
        top = self.levels[-1]
        acc = top.zero
        for mask, coef in enumerate(v):
            if not coef:
                continue
            term = top.convert(coef) if len(self.levels) > 1 else coef
            for i in range(self.mq.n):
                if mask >> i & 1:
                    term = top.mul(term, self.sqrt_elems[i])
            acc = top.add(acc, term)
        return acc

    def view(self, field) -> fo.FieldView:
        return fo.FieldView("multiquadratic", field, mq=self.mq, to_mq=self.to_mq, from_mq=self.from_mq, label=repr(self.mq))


def _const_in(F, r):
    """Rational constant as an element of a nested extension of QQ."""
    if F is QQ or getattr(F, "characteristic", None) == 0 and not hasattr(F, "d"):
        return F.convert(Fraction(r))
    return (_const_in(F.base, r),) + (F.base.zero,) * (F.d - 1)


def _rational_of(level, x, depth):
    """The rational number x represents when it lies in QQ, else None."""
    v = x
    for _ in range(depth):
        if any(not _is_zero_nested(c) for c in v[1:]):
            return None
        v = v[0]
    return Fraction(v)


def _is_zero_nested(v) -> bool:
    if isinstance(v, tuple):
        return all(_is_zero_nested(c) for c in v)
    return v == 0


# -----------------------------------------------------------------------------
# adjunction
# -----------------------------------------------------------------------------

def _fresh(tower: FieldTower, name: str):
    if not name.isidentifier():
        raise InvalidStep(f"{name!r} is not a valid generator name")
    if name in tower.step_names():
        raise InvalidStep(f"name {name!r} already used in the tower")


def adjoin_transcendental(tower: FieldTower, name: str) -> FieldTower:
    _fresh(tower, name)
    if tower.is_ambient:
        spec = tower.ambient_spec()
        if name not in spec.ambient_vars:
            raise AmbientUnavailable(f"{name} is not a variable of the ambient field")
        if name in spec.vars():
            raise InvalidStep(f"{name} is algebraic over the tower (some power already lies in it)")
        return FieldTower(tower.root, tower.steps + (Transcendental(name),), tower.name)
    if tower.is_ambient is False and name in tower.transcendentals:
        raise InvalidStep(f"{name} already adjoined")
    return FieldTower(tower.root, tower.steps + (Transcendental(name),), tower.name)


def adjoin_root(tower: FieldTower, name: str, minpoly: UniPoly) -> FieldTower:
    """Adjoin a root of ``minpoly`` (over tower.field) after certifying irreducibility."""
    _fresh(tower, name)
    if minpoly.is_constant() or minpoly._deg() < 2:
        raise InvalidStep("minimal polynomials must have degree at least 2")
    f = minpoly.monic()
    if tower.is_ambient:
        return _adjoin_ambient_root(tower, name, f)
    res = fo.decide(f, tower.view())
    if not res.irreducible:
        g = res.factors[0][0]
        raise ReducibleMinPoly(f"{f} is reducible over {tower.name}: factor {g}", g)
    step = Step(StepKind.ALGEBRAIC, name, f, res.cert)
    return FieldTower(tower.root, tower.steps + (step,), tower.name)


def _adjoin_ambient_root(tower: FieldTower, name: str, f: UniPoly) -> FieldTower:
    bd = binomial_data(f)
    if bd is None:
        raise AmbientUnavailable("ambient towers adjoin roots of binomials X^(p^m) - a only")
    m, a = bd
    if not tower.contains(a):
        raise InvalidStep(f"coefficient {a} does not lie in {tower.name}")
    irr, cert = fo.binomial_irreducible(tower.characteristic, m, a, tower.view().roots)
    if not irr:
        g = fo.binomial_factor(cert, f.var)
        raise ReducibleMinPoly(f"{f} is reducible over {tower.name}: factor {g}", g)
    r = a
    for _ in range(m):
        r = pth_power_test(r)
        if r is None:
            raise AmbientUnavailable(f"the root of {f} lies outside the ambient field")
    step = Step(StepKind.ALGEBRAIC, name, f, cert, element=r)
    return FieldTower(tower.root, tower.steps + (step,), tower.name)


def adjoin_insep(tower: FieldTower, g: RatFunc, name: str | None = None) -> FieldTower:
    """Adjoin an ambient element g; its minimal polynomial is X^(p^m) - g^(p^m), m minimal."""
    if not tower.is_ambient:
        raise AmbientUnavailable("purely inseparable adjunction needs an ambient presentation")
    name = name or str(g)
    if name in tower.step_names():
        raise InvalidStep(f"name {name!r} already used in the tower")
    spec = tower.ambient_spec()
    extra = g.occurring_vars() - spec.vars()
    if extra:
        raise InvalidStep(f"{g} involves {sorted(extra)}, which are transcendental over {tower.name}")
    m = ik.insep_exponent(g, spec)
    F = tower.coefficient_field
    if m == 0:
        lin = UniPoly.x(F) - UniPoly.const(F, g)
        raise ReducibleMinPoly(f"{g} already lies in {tower.name}: factor {lin}", lin)
    p = tower.characteristic
    a = g.frobenius(p**m)
    irr, cert = fo.binomial_irreducible(p, m, a, tower.view().roots)
    if not irr:
        raise ik.InternalInconsistency("minimal p-power exponent disagrees with the binomial criterion")
    f = UniPoly.monomial(F, p**m) - UniPoly.const(F, a)
    step = Step(StepKind.ALGEBRAIC, name, f, cert, element=g)
    return FieldTower(tower.root, tower.steps + (step,), tower.name)


def adjoin_sqrt(tower: FieldTower, d, name: str):
    """Adjoin sqrt(d) unless it already lies in the tower; returns (tower, adjoined?)."""
    F = tower.field
    f = UniPoly.monomial(F, 2) - UniPoly.const(F, F.convert(Fraction(d)) if tower.characteristic == 0 else F.from_int(d))
    try:
        return adjoin_root(tower, name, f), True
    except ReducibleMinPoly:
        return tower, False


# -----------------------------------------------------------------------------
# minimal polynomials
# -----------------------------------------------------------------------------

def minpoly_of_element(tower: FieldTower, x, over: FieldTower | None = None) -> UniPoly:
    over = over or tower.base_tower()
    if not over.is_prefix_of(tower):
        raise NotAPrefix(f"{over.name} is not a prefix of {tower.name}")
    if tower.td(over) > 0:
        raise InfiniteDegree(f"{tower.name} is transcendental over {over.name}")
    if tower.is_ambient:
        return _ambient_minpoly(tower, x, over)
    j0 = len(over.algebraic_steps)
    E = over.field
    F = tower.field
    degree = tower.degree(over)

    def vec(y):
        out = {}
        for e, c in tower.flatten(y).items():
            out.setdefault(e[j0:], {})[e[:j0]] = c
        return {k: over.unflatten(v) for k, v in out.items()}

    powers = []
    y = F.one
    for _ in range(degree + 1):
        powers.append(vec(y))
        y = F.mul(y, x)
    n, combo = first_dependency(E, powers)
    coeffs = [E.neg(combo.get(i, E.zero)) for i in range(n)] + [E.one]
    return UniPoly(E, coeffs)


def _ambient_minpoly(tower: FieldTower, x: RatFunc, over: FieldTower) -> UniPoly:
    spec = over.ambient_spec()
    m = ik.insep_exponent(x, spec) if not (x.occurring_vars() - spec.vars()) else None
    if m is None:
        raise InfiniteDegree(f"{x} is transcendental over {over.name}")
    F = tower.coefficient_field
    p = tower.characteristic
    return UniPoly.monomial(F, p**m) - UniPoly.const(F, x.frobenius(p**m))


# -----------------------------------------------------------------------------
# separability profile
# -----------------------------------------------------------------------------

class Shape(str, enum.Enum):
    SEPARABLE_ONLY = "SeparableOnly"
    INSEP_ONLY = "InsepOnly"
    SEPARABLE_THEN_INSEP = "SeparableThenInsep"
    UNSPLIT = "Unsplit"


@dataclass(frozen=True)
class InsepGenerator:
    name: str
    m: int
    a: str
    element: object = field(compare=False)


@dataclass(frozen=True)
class SeparabilityProfile:
    shape: Shape
    separable_degree: object
    insep_exponent: int
    generators: tuple
    labels: tuple
    reason: str = ""

    @property
    def splittable(self) -> bool:
        return self.shape is not Shape.UNSPLIT


def _element_support(tower: FieldTower, x):
    """(algebraic level indices, transcendental names) an element involves."""
    levels, names = set(), set()
    for e, c in tower.flatten(x).items():
        levels |= {i for i, k in enumerate(e) if k}
        if isinstance(c, RatFunc):
            names |= c.occurring_vars()
    return levels, names


def classify(tower: FieldTower, over: FieldTower | None = None) -> SeparabilityProfile:
    over = over or tower.base_tower()
    suffix = tower._suffix(over)
    p = tower.characteristic
    labels = []
    gens = []
    sep_deg = 1
    reason = ""
    seen_algebraic = False
    seen_insep = False
    unsplit = False
    n_over = len(over.steps)
    over_levels = len(over.algebraic_steps)
    over_trans = set(over.transcendentals)
    insep_levels: set = set()
    level_of = {s.name: i for i, s in enumerate(tower.algebraic_steps)}
    spec_over = over.ambient_spec() if tower.is_ambient else None
    for idx, s in enumerate(suffix):
        if s.kind is StepKind.TRANSCENDENTAL:
            labels.append((s.name, "transcendental"))
            if seen_algebraic:
                unsplit = True
                reason = reason or f"transcendental {s.name} follows an algebraic step"
            continue
        seen_algebraic = True
        f = s.minpoly
        if p == 0 or is_separable(f):
            labels.append((s.name, "separable"))
            sep_deg *= f._deg()
            if seen_insep:
                unsplit = True
                reason = reason or f"separable step {s.name} follows a purely inseparable one"
            continue
        bd = binomial_data(f)
        if bd is None:
            labels.append((s.name, "inseparable"))
            unsplit = True
            reason = reason or f"inseparable non-binomial minimal polynomial for {s.name}"
            continue
        m, a = bd
        # the generator must be purely inseparable over the base of the split
        if tower.is_ambient:
            ok = not (s.element.occurring_vars() - spec_over.vars())
            a_str = str(a)
        else:
            src = tower._step_source(s)
            lv, nm = _element_support(src, a)
            allowed = set(range(over_levels)) | insep_levels
            ok = lv <= allowed and nm <= over_trans
            a_str = src.to_str(a)
        if not ok:
            labels.append((s.name, "inseparable"))
            unsplit = True
            reason = reason or f"{s.name} is not purely inseparable over {over.name}"
            continue
        labels.append((s.name, "purely_inseparable"))
        seen_insep = True
        if not tower.is_ambient:
            insep_levels.add(level_of[s.name])
        gens.append(InsepGenerator(s.name, m, a_str, s.element if tower.is_ambient else tower.gen(s.name)))
    e = sum(g.m for g in gens)
    has_sep = any(lab in ("separable", "transcendental") for _, lab in labels)
    if unsplit:
        shape = Shape.UNSPLIT
    elif not gens:
        shape = Shape.SEPARABLE_ONLY
    elif has_sep:
        shape = Shape.SEPARABLE_THEN_INSEP
    else:
        shape = Shape.INSEP_ONLY
    return SeparabilityProfile(shape, sep_deg, e, tuple(gens), tuple(labels), reason)


# -----------------------------------------------------------------------------
# elements with an owning tower
# -----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TowerElement:
    tower: FieldTower
    value: object

    def _o(self, other):
        if isinstance(other, TowerElement):
            if other.tower is not self.tower and other.tower != self.tower:
                raise ValueError("elements of different towers")
            return other.value
        return self.tower.field.from_int(other) if isinstance(other, int) else self.tower.field.convert(other)

    def __add__(self, o):
        return TowerElement(self.tower, self.tower.field.add(self.value, self._o(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return TowerElement(self.tower, self.tower.field.sub(self.value, self._o(o)))

    def __rsub__(self, o):
        return TowerElement(self.tower, self.tower.field.sub(self._o(o), self.value))

    def __mul__(self, o):
        return TowerElement(self.tower, self.tower.field.mul(self.value, self._o(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return TowerElement(self.tower, self.tower.field.div(self.value, self._o(o)))

    def __neg__(self):
        return TowerElement(self.tower, self.tower.field.neg(self.value))

    def __pow__(self, n: int):
        return TowerElement(self.tower, self.tower.field.pow(self.value, n))

    def inverse(self):
        return TowerElement(self.tower, self.tower.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, TowerElement):
            return self.tower == other.tower and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def coordinates(self) -> dict:
        if self.tower.is_ambient:
            return {(): self.value}
        return self.tower.flatten(self.value)

    def __str__(self):
        return self.tower.to_str(self.value)

    def __repr__(self):
        return f"TowerElement({self})"


def element(tower: FieldTower, text: str) -> TowerElement:
    return TowerElement(tower, tower.parse(text))
