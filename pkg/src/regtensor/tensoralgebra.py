"""K (x)_k L built explicitly as a finite-dimensional L-algebra, and its local structure.

A = L[xi_1, ..., xi_m] / (f_1, ..., f_m) where f_j is the minimal polynomial of
K's j-th generator with coefficients lifted along k -> L.  Each relation is
monic in xi_j with lower-order terms in xi_1..xi_j, so the monomials with
exponents below the step degrees form an L-basis.

Two decomposition routes cover the supported inputs:

* K purely inseparable over k (ambient towers).  A is local with residue field
  L(S); the maximal ideal is generated by g_j = xi_j^(p^mu_j) - (lift of
  s_j^(p^mu_j)), and edim = m - rank of the relation matrix modulo m^2.
* K separable over k (generic towers).  Relations are factored one step at a
  time over the current branch field; distinct factors split A by explicit
  CRT idempotents and every branch ends in a field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from . import factoracle as fo
from . import insepkernel as ik
from .fieldext import SimpleExtension
from .linalg import RowReducer
from .polyrat import UniPoly, uni_xgcd
from .towers import FieldTower, Shape, StepKind, classify

OracleUnavailable = fo.OracleUnavailable


class NotAlgebraic(ValueError):
    pass


class BaseMismatch(ValueError):
    pass


class VerificationFailure(AssertionError):
    pass


# -----------------------------------------------------------------------------
# the algebra
# -----------------------------------------------------------------------------

class TensorAlgebra:
    """Finite L-algebra with triangular monic relations xi_j^(d_j) = tail_j.

    Elements are dicts {exponent tuple: coefficient in F}, kept reduced.
    """

    def __init__(self, K: FieldTower, L: FieldTower, F, generators, degrees, tails, route: str):
        self.K = K
        self.L = L
        self.F = F
        self.generators = tuple(generators)  # K's step names, in order
        n = len(self.generators)
        self.names = ("X",) if n == 1 else tuple(f"X{i + 1}" for i in range(n))
        self.degrees = tuple(degrees)
        self.tails = [dict(t) for t in tails]
        self.route = route
        self.m = len(self.names)
        self._mono_cache: dict = {}
        self.row_view: TensorAlgebra | None = None  # same algebra over ik.RowField, when built

    def __repr__(self):
        return f"TensorAlgebra({self.K.name} (x) {self.L.name}, dim {self.dim})"

    @property
    def dim(self) -> int:
        d = 1
        for x in self.degrees:
            d *= x
        return d

    def basis(self) -> list[tuple]:
        return [tuple(reversed(e)) for e in itertools.product(*[range(d) for d in reversed(self.degrees)])]

    # -- construction helpers ---------------------------------------------
    def zero(self) -> dict:
        return {}

    def one(self) -> dict:
        return {(0,) * self.m: self.F.one}

    def const(self, c) -> dict:
        return {} if self.F.is_zero(c) else {(0,) * self.m: c}

    def var(self, j: int) -> dict:
        e = [0] * self.m
        e[j] = 1
        return self._reduce_terms({tuple(e): self.F.one})

    def monomial(self, e) -> dict:
        return dict(self._reduce_mono(tuple(e)))

    # -- arithmetic ---------------------------------------------------------
    def _accumulate(self, out: dict, e, c):
        F = self.F
        v = F.add(out[e], c) if e in out else c
        if F.is_zero(v):
            out.pop(e, None)
        else:
            out[e] = v

    def _reduce_mono(self, e: tuple) -> tuple:
        hit = self._mono_cache.get(e)
        if hit is not None:
            return hit
        j = next((i for i in range(self.m - 1, -1, -1) if e[i] >= self.degrees[i]), None)
        if j is None:
            res = ((e, self.F.one),)
        else:
            rest = list(e)
            rest[j] -= self.degrees[j]
            out: dict = {}
            F = self.F
            for te, tc in self.tails[j].items():
                sub = tuple(a + b for a, b in zip(rest, te))
                for re_, rc in self._reduce_mono(sub):
                    self._accumulate(out, re_, F.mul(tc, rc))
            res = tuple(out.items())
        self._mono_cache[e] = res
        return res

    def _reduce_terms(self, terms: dict) -> dict:
        out: dict = {}
        F = self.F
        for e, c in terms.items():
            for re_, rc in self._reduce_mono(e):
                self._accumulate(out, re_, F.mul(c, rc))
        return out

    def add(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for e, c in b.items():
            self._accumulate(out, e, c)
        return out

    def neg(self, a: dict) -> dict:
        return {e: self.F.neg(c) for e, c in a.items()}

    def sub(self, a: dict, b: dict) -> dict:
        return self.add(a, self.neg(b))

    def scale(self, a: dict, c) -> dict:
        if self.F.is_zero(c):
            return {}
        return {e: self.F.mul(x, c) for e, x in a.items()}

    def mul(self, a: dict, b: dict) -> dict:
        F = self.F
        raw: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                self._accumulate(raw, e, F.mul(c1, c2))
        return self._reduce_terms(raw)

    def pow(self, a: dict, n: int) -> dict:
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def is_zero(self, a: dict) -> bool:
        return not a

    def over_field(self, R) -> TensorAlgebra:
        """The same algebra with coefficients moved into R, an isomorphic field with an ``of`` map."""
        B = TensorAlgebra(self.K, self.L, R, self.generators, self.degrees, [{e: R.of(c) for e, c in t.items()} for t in self.tails], self.route)
        B.convert = lambda a: {e: R.of(c) for e, c in a.items()}
        return B

    def eq(self, a: dict, b: dict) -> bool:
        return self.is_zero(self.sub(a, b))

    def from_poly(self, terms: dict) -> dict:
        """Reduce an arbitrary polynomial {exponents: coefficient} into A."""
        return self._reduce_terms({e: c for e, c in terms.items() if not self.F.is_zero(c)})

    def to_str(self, a: dict) -> str:
        if not a:
            return "0"
        F = self.F
        parts = []
        for e in sorted(a, key=lambda e: (sum(e), e), reverse=True):
            c = a[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k)
            neg = F.is_negative_literal(c)
            if neg:
                c = F.neg(c)
            cs = F.to_str(c)
            if mono and any(ch in cs for ch in "+- ") and not cs.startswith("("):
                cs = f"({cs})"
            t = cs if not mono else (mono if F.is_one(c) else f"{cs}*{mono}")
            if not parts:
                parts.append(f"-{t}" if neg else t)
            else:
                parts.append(f" - {t}" if neg else f" + {t}")
        return "".join(parts)

    def relations(self) -> list[str]:
        out = []
        for j, n in enumerate(self.names):
            lhs = f"{n}^{self.degrees[j]}" if self.degrees[j] != 1 else n
            out.append(f"{lhs} = {self.to_str(self.tails[j])}  ({n} stands for {self.generators[j]} (x) 1)")
        return out


# -----------------------------------------------------------------------------
# construction
# -----------------------------------------------------------------------------

def build_tensor(K: FieldTower, L: FieldTower) -> TensorAlgebra:
    """K (x)_k L as an L-algebra; K must be algebraic and finite over the common base."""
    if K.root != L.root:
        raise BaseMismatch(f"{K.name} and {L.name} are not built over the same base presentation")
    if K.td() > 0:
        raise NotAlgebraic(f"{K.name} has transcendental steps; only finite K is built explicitly")
    if not K.algebraic_steps:
        F = L.coefficient_field if L.is_ambient else L.field
        return TensorAlgebra(K, L, F, (), (), (), "trivial")
    if K.is_ambient:
        return _build_ambient(K, L)
    return _build_generic(K, L)


def _monomials(elems, box):
    """All products prod elems[i]^beta_i for beta in the box, keyed by beta."""
    out = []
    for beta in itertools.product(*[range(d) for d in box]):
        v = None
        for x, b in zip(elems, beta):
            if b:
                v = x**b if v is None else v * x**b
        out.append((beta, v))
    return out


def _express(target, field_basis, gens, box, ctx, F):
    """Coefficients c_beta in the field spanned by field_basis with target = sum c_beta gens^beta."""
    monos = _monomials(gens, box)
    spanning, index = [], []
    for beta, mv in monos:
        for b in field_basis:
            spanning.append(b if mv is None else b * mv)
            index.append(beta)
    coords = ik.solve_coordinates(target, spanning, ctx)
    if coords is None:
        raise ik.InternalInconsistency(f"{target} is not in the expected span")
    out: dict = {}
    for beta, b, c in zip(index, field_basis * len(monos), coords):
        if c.is_zero():
            continue
        term = ik.b0_to_ambient(c, ctx) * b
        out[beta] = out[beta] + term if beta in out else term
    return {beta: c for beta, c in out.items() if not c.is_zero()}


def _pad(beta, m, j=None, t=0):
    e = list(beta) + [0] * (m - len(beta))
    if j is not None:
        e[j] = t
    return tuple(e)


def _build_ambient(K: FieldTower, L: FieldTower) -> TensorAlgebra:
    if not L.is_ambient:
        raise BaseMismatch("ambient K needs an ambient L")
    prof = classify(K)
    if prof.shape is not Shape.INSEP_ONLY:
        raise OracleUnavailable(f"{K.name} is not purely inseparable over its base ({prof.shape.value})")
    F = L.coefficient_field
    k_spec = K.root.ambient
    ctx_k = ik.joint_context([k_spec])
    kb = ik.basis_of(k_spec, ctx_k).elements()
    steps = K.algebraic_steps
    S = [s.element for s in steps]
    m = len(steps)
    degrees = [s.degree for s in steps]
    tails = []
    for j, s in enumerate(steps):
        a = s.element.frobenius(s.degree)
        coeffs = _express(a, kb, S[:j], degrees[:j], ctx_k, F)
        tails.append({_pad(beta, m): c for beta, c in coeffs.items()})
    A = TensorAlgebra(K, L, F, [s.name for s in steps], degrees, tails, "inseparable")
    A.S = S
    return A


def _build_generic(K: FieldTower, L: FieldTower) -> TensorAlgebra:
    if L.is_ambient:
        raise BaseMismatch("generic K needs a generic L")
    F = L.field
    base = L.base_tower()
    steps = K.algebraic_steps
    m = len(steps)
    tails = []
    for j, s in enumerate(steps):
        sub = K.prefix(K.steps.index(s))
        tail = {}
        for t, c in enumerate(s.minpoly.coeffs[:-1]):
            for beta, cc in sub.flatten(c).items():
                v = F.neg(L.embed(base, cc))
                if not F.is_zero(v):
                    tail[_pad(beta, m, j, t)] = v
        tails.append(tail)
    return TensorAlgebra(K, L, F, [s.name for s in steps], [s.degree for s in steps], tails, "separable")


# -----------------------------------------------------------------------------
# local structure
# -----------------------------------------------------------------------------

@dataclass
class LocalFactor:
    idempotent: dict
    residue_field: str
    residue_degree: int  # over L
    dim: int  # as an L-vector space
    max_ideal_generators: list
    nilpotency_index: int
    edim: int
    details: dict = field(default_factory=dict)

    @property
    def is_field(self) -> bool:
        return self.edim == 0

    @property
    def krull_dim(self) -> int:
        return 0


@dataclass
class Decomposition:
    algebra: TensorAlgebra
    factors: list

    @property
    def idempotents(self) -> list:
        return [f.idempotent for f in self.factors]

    @property
    def nilradical(self) -> list:
        return [g for f in self.factors for g in f.max_ideal_generators if f.nilpotency_index > 1]

    @property
    def is_reduced(self) -> bool:
        return all(f.nilpotency_index == 1 for f in self.factors)

    @property
    def is_domain(self) -> bool:
        return len(self.factors) == 1 and self.factors[0].is_field

    @property
    def is_field(self) -> bool:
        return self.is_domain

    @property
    def regular(self) -> bool:
        return all(f.edim == f.krull_dim for f in self.factors)


def decompose_local(A: TensorAlgebra) -> Decomposition:
    if A.route == "trivial":
        desc = f"{A.L.name}"
        dec = Decomposition(A, [LocalFactor(A.one(), desc, 1, 1, [], 1, 0)])
    elif A.route == "inseparable":
        dec = Decomposition(A, [_local_inseparable(A)])
    else:
        dec = Decomposition(A, _split_separable(A))
    verify(dec)
    return dec


def verify(dec: Decomposition) -> None:
    """Re-check the decomposition by arithmetic in A."""
    A = dec.algebra
    total = sum(f.dim for f in dec.factors)
    if total != A.dim:
        raise VerificationFailure(f"local factor dimensions sum to {total}, expected {A.dim}")
    es = dec.idempotents
    acc = A.zero()
    for i, e in enumerate(es):
        if not A.eq(A.mul(e, e), e):
            raise VerificationFailure(f"idempotent {i} is not idempotent")
        for f in es[i + 1:]:
            if not A.is_zero(A.mul(e, f)):
                raise VerificationFailure("idempotents are not orthogonal")
        acc = A.add(acc, e)
    if not A.eq(acc, A.one()):
        raise VerificationFailure("idempotents do not sum to 1")
    # m^N = 0 in each local factor, so the reported index N bounds every nilpotent and
    # checking nu^N = 0 is far cheaper than the power A.dim. The row view, when present,
    # holds the same algebra with cheaper coefficients.
    bound = max((f.nilpotency_index for f in dec.factors), default=A.dim)
    B = A.row_view or A
    for nu in dec.nilradical:
        power = nu_b = B.convert(nu) if B is not A else nu
        for _ in range(bound - 1):
            if B.is_zero(power):
                break
            power = B.mul(power, nu_b)
        if not B.is_zero(power):
            raise VerificationFailure(f"nilradical element {A.to_str(nu)} does not vanish at power {bound}")


# -- purely inseparable route --------------------------------------------------

def _eval_at(terms: dict, S, F):
    acc = F.zero
    for e, c in terms.items():
        v = c
        for x, k in zip(S, e):
            if k:
                v = v * x**k
        acc = acc + v
    return acc


def _poly_mul(a: dict, b: dict, F) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out[e] + c1 * c2 if e in out else c1 * c2
            if v.is_zero():
                out.pop(e, None)
            else:
                out[e] = v
    return out


def _poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out[e] + c if e in out else c
        if v.is_zero():
            out.pop(e, None)
        else:
            out[e] = v
    return out


def _linear_part(h: dict, top: int, G: list, S, F) -> dict:
    """Coefficients c_i in the residue field with h = sum c_i g_i mod m^2.

    h is a polynomial in xi_0..xi_{top-1} vanishing at S; G[i] = (D_i, btilde_i)
    describes g_i = xi_i^D_i - btilde_i.
    """
    if not h:
        return {}
    if top == 0:
        raise ik.InternalInconsistency("a nonzero constant lies in the maximal ideal")
    i = top - 1
    D, btilde = G[i]
    # split h by the xi_i exponent
    by_t: dict = {}
    for e, c in h.items():
        t = e[i]
        rest = e[:i] + (0,) + e[i + 1:]
        by_t.setdefault(t, {})[rest] = c
    quotient: dict = {}
    while by_t and max(by_t) >= D:
        t = max(by_t)
        Ht = by_t.pop(t)
        quotient[t - D] = _poly_add(quotient.get(t - D, {}), Ht)
        by_t[t - D] = _poly_add(by_t.get(t - D, {}), _poly_mul(Ht, btilde, F))
    out: dict = {}
    qs = F.zero
    for u, Q in quotient.items():
        qs = qs + _eval_at(Q, S, F) * S[i] ** u
    if not qs.is_zero():
        out[i] = qs
    for t, R in by_t.items():
        if not R:
            continue
        weight = S[i] ** t
        for idx, c in _linear_part(R, i, G, S, F).items():
            v = out[idx] + c * weight if idx in out else c * weight
            if v.is_zero():
                out.pop(idx, None)
            else:
                out[idx] = v
    return out


def _local_inseparable(A: TensorAlgebra) -> LocalFactor:
    K, L, F = A.K, A.L, A.F
    S = A.S
    m = A.m
    L_spec = L.ambient_spec()
    ctx = ik.joint_context([L_spec], S)
    gens = list(L_spec.generators)
    lb = ik.basis_of(L_spec, ctx)
    Lb = lb.elements()
    dims = [lb.dim]
    for s in S:
        gens.append(s)
        dims.append(ik.subalgebra_closure(gens, ctx).dim)
    D = [dims[j + 1] // dims[j] for j in range(m)]
    G = []
    for j in range(m):
        target = S[j] ** D[j]
        coeffs = _express(target, Lb, S[:j], D[:j], ctx, F)
        G.append((D[j], {_pad(beta, m): c for beta, c in coeffs.items()}))
    # relation matrix modulo m^2, columns reversed so pivots land on late g's
    rows = []
    for j in range(m):
        fj = {_pad((), m, j, A.degrees[j]): F.one}
        for e, c in A.tails[j].items():
            fj = _poly_add(fj, {e: -c})
        rows.append(_linear_part(fj, j + 1, G, S, F))
    rr = RowReducer(F)
    for r in rows:
        rr.add({m - 1 - i: c for i, c in r.items()})
    pivots = {m - 1 - c for c in rr.rows}
    free = [i for i in range(m) if i not in pivots]
    edim = m - rr.rank
    g_elems = []
    for i in range(m):
        Di, bt = G[i]
        g_elems.append(A.from_poly(_poly_add({_pad((), m, i, Di): F.one}, {e: -c for e, c in bt.items()})))
    gens_m = [g_elems[i] for i in free]
    # powers of the maximal ideal are long sums of products; row coordinates keep them cheap
    A.row_view = A.over_field(ik.RowField(ctx))
    index = _nilpotency_index(A.row_view, [A.row_view.convert(g) for g in gens_m])
    residue = "(" + ", ".join(s.name for s in K.algebraic_steps) + ")"
    deg = dims[-1] // dims[0]
    matrix = [[F.to_str(r.get(i, F.zero)) for i in range(m)] for r in rows]
    return LocalFactor(
        A.one(),
        f"{L.name}{residue}",
        deg,
        A.dim,
        gens_m,
        index,
        edim,
        {"relation_matrix_mod_m2": matrix, "step_degrees_over_L": D, "all_max_ideal_generators": [A.to_str(g) for g in g_elems]},
    )


def _nilpotency_index(A: TensorAlgebra, gens: list) -> int:
    if not gens:
        return 1
    n = len(gens)
    level = {(i,): gens[i] for i in range(n)}
    N = 1
    while True:
        if all(A.is_zero(v) for v in level.values()):
            return N
        if N > A.dim:
            raise VerificationFailure("maximal ideal is not nilpotent")
        nxt = {}
        for key, v in level.items():
            for i in range(key[-1], n):
                nxt[key + (i,)] = A.mul(v, gens[i])
        level = nxt
        N += 1


# -- separable route -----------------------------------------------------------

@dataclass
class _Branch:
    E: object
    view: fo.FieldView
    model: object  # MQModel or None
    images: list  # images of xi_0..xi_{j-1} in E
    lift: Callable  # L.field element -> E element
    phi: Callable  # E element -> A element (non-unital, phi(1) = e)
    e: dict
    names: list
    degree: int


def _initial_view(L: FieldTower):
    if L.characteristic == 0:
        if not L.transcendentals:
            model = L.mq_model
            if model is None:
                raise OracleUnavailable(f"{L.name} is not a multiquadratic field")
            return model.view(L.field), model
        if not L.algebraic_steps:
            return fo.ratfunc_view(L.field), None
        raise OracleUnavailable(f"no factorization oracle over {L.name}")
    return L.view(), None


def _split_separable(A: TensorAlgebra) -> list:
    L = A.L
    view, model = _initial_view(L)
    start = _Branch(L.field, view, model, [], lambda c: c, lambda c: A.const(c), A.one(), [], 1)
    branches = [start]
    for j in range(A.m):
        nxt = []
        for br in branches:
            nxt.extend(_split_step(A, br, j))
        branches = nxt
    out = []
    for br in branches:
        desc = L.name + ("(" + ", ".join(br.names) + ")" if br.names else "")
        out.append(LocalFactor(br.e, desc, br.degree, br.degree, [], 1, 0, {}))
    return out


def _relation_over(A: TensorAlgebra, br: _Branch, j: int) -> UniPoly:
    E = br.E
    coeffs = [E.zero] * A.degrees[j]
    for e, c in A.tails[j].items():
        v = br.lift(c)
        for x, k in zip(br.images, e[:j]):
            if k:
                v = E.mul(v, E.pow(x, k))
        coeffs[e[j]] = E.sub(coeffs[e[j]], v)
    return UniPoly(E, coeffs + [E.one])


def _poly_in_A(A: TensorAlgebra, br: _Branch, u: UniPoly, j: int) -> dict:
    """phi applied to the coefficients of u, evaluated at xi_j."""
    xi = A.var(j)
    acc = A.zero()
    power = A.one()
    for c in u.coeffs:
        if not br.E.is_zero(c):
            acc = A.add(acc, A.mul(br.phi(c), power))
        power = A.mul(power, xi)
    return acc


def _split_step(A: TensorAlgebra, br: _Branch, j: int) -> list:
    E = br.E
    f = _relation_over(A, br, j)
    factors = fo.factor_over(f, br.view)
    if any(mult > 1 for _, mult in factors):
        raise ik.InternalInconsistency("separable relation acquired a repeated factor")
    out = []
    polys = [g for g, _ in factors]
    name = A.generators[j]
    for i, g in enumerate(polys):
        if len(polys) == 1:
            e_new = br.e
        else:
            h = f.exact_div(g)
            _, s, _ = uni_xgcd(h, g)
            u = (h * s).divmod(f)[1]
            e_new = A.mul(br.e, _poly_in_A(A, br, u, j))
        if g._deg() == 1:
            root = E.neg(g.coeff(0))
            phi = _restricted(A, br.phi, e_new)
            out.append(_Branch(E, br.view, br.model, br.images + [root], br.lift, phi, e_new, br.names, br.degree))
            continue
        E2 = SimpleExtension(E, g, name)
        view2, model2 = _extend_view(br, E2, g)
        wrap = lambda x, E2=E2: (x,) + (E2.base.zero,) * (E2.d - 1)
        images = [wrap(x) for x in br.images] + [E2.gen()]
        lift = (lambda c, lift=br.lift, wrap=wrap: wrap(lift(c)))
        phi = _extension_phi(A, br.phi, e_new, j)
        out.append(_Branch(E2, view2, model2, images, lift, phi, e_new, br.names + [name], br.degree * g._deg()))
    return out


def _restricted(A, phi, e):
    return lambda c: A.mul(e, phi(c))


def _extension_phi(A, phi, e, j):
    xi = A.var(j)

    def run(c):
        acc = A.zero()
        power = e
        for x in c:
            acc = A.add(acc, A.mul(phi(x), power))
            power = A.mul(power, xi)
        return acc

    return run


def _extend_view(br: _Branch, E2, g: UniPoly):
    if br.view.kind == "finite":
        return fo.finite_view(E2), None
    if br.model is not None and g._deg() == 2:
        b = br.model.mq.rational_part(br.model.to_mq(g.coeff(1)))
        c = br.model.mq.rational_part(br.model.to_mq(g.coeff(0)))
        if b is not None and c is not None:
            model = br.model.extend_by_quadratic(E2, b, c)
            if model is not None:
                return model.view(E2), model
    return fo.FieldView("other", E2, label=repr(E2)), None


# -----------------------------------------------------------------------------
# structural queries
# -----------------------------------------------------------------------------

def structural_queries(dec: Decomposition) -> dict:
    A = dec.algebra
    return {
        "is_reduced": dec.is_reduced,
        "is_domain": dec.is_domain,
        "is_field": dec.is_field,
        "nilradical": [A.to_str(x) for x in dec.nilradical],
        "idempotents": [A.to_str(e) for e in dec.idempotents],
    }


def regular_direct(A: TensorAlgebra) -> bool:
    return decompose_local(A).regular


def summarize(dec: Decomposition) -> dict:
    A = dec.algebra
    return {
        "dim_over_L": A.dim,
        "relations": A.relations(),
        "local_factors": [
            {
                "residue_field": f.residue_field,
                "residue_degree": f.residue_degree,
                "dim_over_L": f.dim,
                "max_ideal_generators": [A.to_str(g) for g in f.max_ideal_generators],
                "nilpotency_index": f.nilpotency_index,
                "edim": f.edim,
                "krull_dim": f.krull_dim,
                "is_field": f.is_field,
            }
            for f in dec.factors
        ],
        **structural_queries(dec),
    }
