"""Regularity verdicts for tensor products, each backed by a replayable certificate.

Every public check returns a ``Verdict``.  Rules are named by what they do
(for instance "inseparable degree criterion"); witnesses keep references to
the towers they were computed from so ``replay`` can recompute them.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import factoracle as fo
from . import insepkernel as ik
from . import tensoralgebra as ta
from .linalg import intersect_spaces, rank
from .towers import FieldTower, Shape, classify, INF

AmbientUnavailable = ik.AmbientUnavailable


class UnsplitTower(ValueError):
    pass


class SeparabilityNotCertified(ValueError):
    pass


class InsufficientDescriptors(ValueError):
    pass


class ConsistencyFailure(AssertionError):
    def __init__(self, message, engine_verdict=None, direct=None):
        super().__init__(message)
        self.engine_verdict = engine_verdict
        self.direct = direct


class Regularity(str, enum.Enum):
    YES = "regular"
    NO = "not_regular"
    HYPOTHESIS_NOT_VERIFIED = "hypothesis_not_verified"


class Noetherian(str, enum.Enum):
    YES = "yes"
    UNKNOWN = "unknown"


# -----------------------------------------------------------------------------
# certificates
# -----------------------------------------------------------------------------

@dataclass
class Rule:
    name: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"rule": self.name, "detail": self.detail}


@dataclass
class DegreeWitness:
    subset: tuple
    deg_k: int
    deg_L: int
    K: FieldTower = field(repr=False, compare=False, default=None)
    L: FieldTower = field(repr=False, compare=False, default=None)

    def to_json(self) -> dict:
        return {"kind": "degree", "S'": list(self.subset), "deg_k": self.deg_k, "deg_L": self.deg_L}

    def replay(self) -> bool:
        gens = _insep_generators(self.K)
        chosen = [g for g in gens if g.name in self.subset]
        dk, dl = _degrees(self.K, self.L, [g.element for g in chosen])
        return (dk, dl) == (self.deg_k, self.deg_L) and dk != dl


@dataclass
class IntersectionWitness:
    subset: tuple
    intersection: list
    k_basis: list
    K: FieldTower = field(repr=False, compare=False, default=None)
    L: FieldTower = field(repr=False, compare=False, default=None)

    @property
    def equal(self) -> bool:
        return self.intersection == self.k_basis

    def to_json(self) -> dict:
        return {
            "kind": "intersection",
            "S'": list(self.subset),
            "dim_Ki_cap_LS'": len(self.intersection),
            "dim_kS'": len(self.k_basis),
            "Ki_cap_LS'_basis": self.intersection,
            "kS'_basis": self.k_basis,
            "equal": self.equal,
        }

    def replay(self) -> bool:
        w = condition_v(self.K, self.L, self.subset)
        return w.intersection == self.intersection and w.k_basis == self.k_basis


@dataclass
class NilpotentWitness:
    element: str
    edim: int
    krull_dim: int
    nilpotency_index: int

    def to_json(self) -> dict:
        return {"kind": "nilpotent", "element": self.element, "edim": self.edim, "krull_dim": self.krull_dim,
                "nilpotency_index": self.nilpotency_index}


@dataclass
class IdempotentWitness:
    idempotents: list

    def to_json(self) -> dict:
        return {"kind": "idempotents", "count": len(self.idempotents), "idempotents": self.idempotents}


@dataclass
class SeparabilityWitness:
    field_name: str
    shape: str
    labels: list
    insep_generators: list

    def to_json(self) -> dict:
        return {"kind": "separability", "field": self.field_name, "shape": self.shape, "steps": self.labels,
                "insep_generators": self.insep_generators}


@dataclass
class DataWitness:
    """Plain computed data (dimensions, bases, counts)."""

    kind: str
    data: dict

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.data}


@dataclass
class Certificate:
    rules: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)

    def rule(self, name: str, detail: str = ""):
        self.rules.append(Rule(name, detail))

    def rule_names(self) -> list[str]:
        return [r.name for r in self.rules]


@dataclass
class Verdict:
    regular: Optional[Regularity]
    noetherian: Noetherian = Noetherian.UNKNOWN
    krull_dim: Optional[int] = None
    certificate: Certificate = field(default_factory=Certificate)
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "verdict": self.regular.value if self.regular else None,
            "noetherian": self.noetherian.value,
            "dim": self.krull_dim,
            "rule_chain": [r.to_json() for r in self.certificate.rules],
            "witnesses": [w.to_json() for w in self.certificate.witnesses],
            "assumptions": list(self.certificate.assumptions),
            "details": self.details,
        }


# -----------------------------------------------------------------------------
# small shared pieces
# -----------------------------------------------------------------------------

def _profile_witness(K: FieldTower, prof) -> SeparabilityWitness:
    return SeparabilityWitness(
        K.name,
        prof.shape.value,
        [f"{n}: {lab}" for n, lab in prof.labels],
        [f"{g.name}: X^{K.characteristic}^{g.m} - ({g.a})" for g in prof.generators],
    )


def dim_tensor(K: FieldTower, L: FieldTower) -> int:
    return min(K.td(), L.td())


def _noetherian_fields(cert: Certificate, K: FieldTower, L: FieldTower) -> Noetherian:
    cert.rule("finite-generation Noetherian rule",
              f"{K.name} and {L.name} are finitely generated, so the tensor product is a localization of a finitely generated algebra")
    return Noetherian.YES


def _dimension_rule(cert: Certificate, K: FieldTower, L: FieldTower) -> int:
    d = dim_tensor(K, L)
    cert.rule("dimension formula", f"dim = min(td({K.name}) = {K.td()}, td({L.name}) = {L.td()}) = {d}")
    return d


def tensor_dimension(K: FieldTower, L: FieldTower) -> Verdict:
    """Krull dimension and Noetherianity of K (x) L, without a regularity verdict."""
    _check_base(K, L)
    cert = Certificate()
    v = Verdict(None, certificate=cert)
    v.noetherian = _noetherian_fields(cert, K, L)
    v.krull_dim = _dimension_rule(cert, K, L)
    return v


def _check_base(K: FieldTower, L: FieldTower):
    if K.root != L.root:
        raise ta.BaseMismatch(f"{K.name} and {L.name} are not over the same base field presentation")


# -----------------------------------------------------------------------------
# separable base change (geometric regularity of separable extensions)
# -----------------------------------------------------------------------------

def check_lemma1(K: FieldTower, L: FieldTower) -> Verdict:
    """K separable over k (certified); L is a field hence regular."""
    _check_base(K, L)
    prof = classify(K)
    if prof.shape is not Shape.SEPARABLE_ONLY:
        raise SeparabilityNotCertified(f"{K.name} is not certified separable over {K.root.name} ({prof.shape.value})")
    cert = Certificate()
    v = Verdict(Regularity.YES, certificate=cert)
    v.noetherian = _noetherian_fields(cert, K, L)
    v.krull_dim = _dimension_rule(cert, K, L)
    cert.rule("separable base change rule",
              f"{K.name} is separable over {K.root.name} (transcendentals first, separable algebraic steps), hence geometrically regular; "
              f"{L.name} is a field, hence regular; a Noetherian tensor product with a geometrically regular factor is regular")
    cert.witnesses.append(_profile_witness(K, prof))
    return v


# -----------------------------------------------------------------------------
# inseparable degree criterion
# -----------------------------------------------------------------------------

def _insep_generators(K: FieldTower):
    return list(classify(K).generators)


def _ambient_pair(K: FieldTower, L: FieldTower):
    if not (K.is_ambient and L.is_ambient):
        raise AmbientUnavailable(
            f"degrees over {L.name} need a common ambient presentation of {K.name} and {L.name}")
    _check_base(K, L)


def _degrees(K: FieldTower, L: FieldTower, subset) -> tuple[int, int]:
    """([k(S'):k], [L(S'):L]) for ambient elements S'."""
    subset = list(subset)
    k_spec = K.root.ambient
    ctx_k = ik.joint_context([k_spec], subset)
    k_gens = list(k_spec.generators)
    dk0 = ik.subalgebra_closure(k_gens, ctx_k).dim
    dk1 = ik.subalgebra_closure(k_gens + subset, ctx_k).dim
    L_spec = L.ambient_spec()
    ctx_L = ik.joint_context([L_spec], subset)
    L_gens = list(L_spec.generators)
    dl0 = ik.basis_of(L_spec, ctx_L).dim
    dl1 = ik.subalgebra_closure(L_gens + subset, ctx_L).dim
    return dk1 // dk0, dl1 // dl0


def condition_v(K: FieldTower, L: FieldTower, subset_names) -> IntersectionWitness:
    """K_i ∩ L(S') against k(S'), both inside F_p(support of k).

    L(S') is first cut down to the variables of k (dropping L's transcendentals
    exactly), so no spurious base change enters the intersection.
    """
    _ambient_pair(K, L)
    gens = _insep_generators(K)
    S = [g.element for g in gens]
    Sp = [g.element for g in gens if g.name in subset_names]
    k_spec = K.root.ambient
    keep = k_spec.vars()
    LS = ik.restrict_field(L.ambient_spec().with_generators(list(L.ambient_spec().generators) + Sp), keep)
    ctx = LS.ctx
    k_gens = list(k_spec.generators)
    Ki = ik.subalgebra_closure(k_gens + S, ctx)
    kS = ik.subalgebra_closure(k_gens + Sp, ctx)
    inter = ik.intersect(Ki, LS)
    return IntersectionWitness(tuple(g.name for g in gens if g.name in subset_names),
                               _basis_strings(inter), _basis_strings(kS), K, L)


def _basis_strings(b: ik.SubfieldBasis) -> list[str]:
    return [str(x) for x in b.elements()]


def verdict_condition_v(K: FieldTower, L: FieldTower) -> tuple[Regularity, Optional[IntersectionWitness]]:
    """Regularity decided by the intersection criterion over every subset of S."""
    gens = _insep_generators(K)
    names = [g.name for g in gens]
    for size in range(len(names) + 1):
        for sub in itertools.combinations(names, size):
            w = condition_v(K, L, sub)
            if not w.equal:
                return Regularity.NO, w
    return Regularity.YES, None


def check_theorem2(K: FieldTower, L: FieldTower, *, strict: bool = False, with_condition_v: bool = True) -> Verdict:
    _check_base(K, L)
    prof = classify(K)
    cert = Certificate()
    v = Verdict(None, certificate=cert)
    v.noetherian = _noetherian_fields(cert, K, L)
    v.krull_dim = _dimension_rule(cert, K, L)
    cert.witnesses.append(_profile_witness(K, prof))
    if prof.shape is Shape.UNSPLIT:
        if strict:
            raise UnsplitTower(f"{K.name}: {prof.reason}")
        v.regular = Regularity.HYPOTHESIS_NOT_VERIFIED
        cert.rule("separable/inseparable split check",
                  f"{K.name} could not be certified as a separable part followed by purely inseparable binomial steps: {prof.reason}")
        return v
    cert.rule("separable/inseparable split check",
              f"{K.name} = K_s K_i with shape {prof.shape.value}")
    if not prof.generators:
        v.regular = Regularity.YES
        cert.rule("separable base change rule", f"{K.name} has no purely inseparable part, so it is separable over {K.root.name}")
        return v
    if prof.shape is Shape.SEPARABLE_THEN_INSEP:
        cert.rule("separable part stripped",
                  f"the separable part of {K.name} is geometrically regular and linearly disjoint from K_i; only S matters")
    _ambient_pair(K, L)
    S = [g.element for g in prof.generators]
    names = tuple(g.name for g in prof.generators)
    deg_k, deg_L = _degrees(K, L, S)
    expected = K.characteristic ** prof.insep_exponent
    if deg_k != expected:
        raise ik.InternalInconsistency(f"[k(S):k] = {deg_k} disagrees with the tower degree {expected}")
    v.details["S"] = list(names)
    v.details["deg_k(S)"] = deg_k
    v.details["deg_L(S)"] = deg_L
    if deg_k == deg_L:
        v.regular = Regularity.YES
        cert.rule("inseparable degree criterion",
                  f"[k(S):k] = [L(S):L] = {deg_k} at S' = S = {{{', '.join(names)}}}")
        cert.rule("derived lemma: equality at S' = S suffices",
                  "equal finite degrees make k(S) (x) L -> L(S) an isomorphism, so K_i and L are linearly disjoint and every subset satisfies the equality")
        cert.witnesses.append(DataWitness("degree_equality", {"S'": list(names), "deg_k": deg_k, "deg_L": deg_L}))
    else:
        v.regular = Regularity.NO
        sub = list(prof.generators)
        for g in list(sub):
            trial = [h for h in sub if h is not g]
            dk, dl = _degrees(K, L, [h.element for h in trial])
            if dk != dl:
                sub = trial
        dk, dl = _degrees(K, L, [h.element for h in sub])
        cert.rule("inseparable degree criterion",
                  f"[k(S'):k] = {dk} differs from [L(S'):L] = {dl} at S' = {{{', '.join(h.name for h in sub)}}}")
        cert.witnesses.append(DegreeWitness(tuple(h.name for h in sub), dk, dl, K, L))
    if with_condition_v:
        rv, w = verdict_condition_v(K, L)
        v.details["intersection_criterion_verdict"] = rv.value
        if w is not None:
            cert.rule("intersection criterion", f"K_i ∩ L(S') differs from k(S') at S' = {{{', '.join(w.subset)}}}")
            cert.witnesses.append(w)
        else:
            cert.rule("intersection criterion", "K_i ∩ L(S') = k(S') for every subset S' of S")
    return v


# -----------------------------------------------------------------------------
# self tensor
# -----------------------------------------------------------------------------

def check_self_tensor(K: FieldTower) -> Verdict:
    prof = classify(K)
    cert = Certificate()
    v = Verdict(None, certificate=cert)
    cert.rule("finite-generation Noetherian rule", f"{K.name} is finitely generated over {K.root.name}")
    v.noetherian = Noetherian.YES
    v.krull_dim = _dimension_rule(cert, K, K)
    cert.witnesses.append(_profile_witness(K, prof))
    if prof.shape is Shape.SEPARABLE_ONLY:
        v.regular = Regularity.YES
        cert.rule("self-tensor separability criterion",
                  f"{K.name} (x) {K.name} is regular exactly when {K.name} is a finitely generated separable extension; it is")
    elif prof.generators:
        v.regular = Regularity.NO
        g = prof.generators[0]
        cert.rule("self-tensor separability criterion",
                  f"{g.name} is purely inseparable over {K.root.name}, so {K.name} is not separable and {K.name} (x) {K.name} is not regular")
    else:
        v.regular = Regularity.HYPOTHESIS_NOT_VERIFIED
        cert.rule("self-tensor separability criterion", f"separability of {K.name} could not be certified: {prof.reason}")
    return v


# -----------------------------------------------------------------------------
# separable algebraic: product of fields
# -----------------------------------------------------------------------------

def _mq_compositum(K: FieldTower, L: FieldTower):
    """n = [K ∩ L : Q] by linear algebra in the compositum of two multiquadratic towers."""
    mk, ml = K.mq_model, L.mq_model
    if mk is None or ml is None:
        return None
    gens: list[int] = []
    for d in mk.mq.gens + ml.mq.gens:
        if fo.sqrt_in_multiquadratic(d, gens) is None:
            gens.append(d)
    C = fo.MultiQuadField(gens)

    def vectors(mq):
        out = []
        for mask in range(mq.size):
            d = 1
            for i in range(mq.n):
                if mask >> i & 1:
                    d *= mq.gens[i]
            q, T = fo.sqrt_in_multiquadratic(d, gens)
            cm = sum(1 << i for i in T)
            out.append({cm: Fraction(q)})
        return out

    from .exactscalar import QQ

    VK, VL = vectors(mk.mq), vectors(ml.mq)
    inter = intersect_spaces(QQ, VK, VL)
    n = len(inter)
    if n != len(VK) + len(VL) - rank(QQ, VK + VL):
        raise ik.InternalInconsistency("intersection dimension disagrees with the rank count")
    return {"compositum": repr(C), "compositum_degree": C.size, "n": n,
            "intersection_basis": [C.to_str(_dense(v, C)) for v in inter]}


def _dense(v: dict, C):
    out = [Fraction(0)] * C.size
    for k, x in v.items():
        out[k] = x
    return tuple(out)


def check_separable_algebraic(K: FieldTower, L: FieldTower) -> Verdict:
    _check_base(K, L)
    prof = classify(K)
    if prof.shape is not Shape.SEPARABLE_ONLY or K.td() > 0:
        raise SeparabilityNotCertified(f"{K.name} is not certified separable algebraic over {K.root.name}")
    cert = Certificate()
    v = Verdict(None, certificate=cert)
    v.noetherian = _noetherian_fields(cert, K, L)
    v.krull_dim = _dimension_rule(cert, K, L)
    A = ta.build_tensor(K, L)
    dec = ta.decompose_local(A)
    summary = ta.summarize(dec)
    v.details["decomposition"] = summary
    v.regular = Regularity.YES if dec.regular else Regularity.NO
    cert.rule("product-of-fields criterion",
              f"zero-dimensional {K.name} (x) {L.name}: regular, reduced and a finite product of fields are equivalent; "
              f"found {len(dec.factors)} field factor(s)" if dec.is_reduced else "a local factor has nilpotents")
    cert.witnesses.append(IdempotentWitness(summary["idempotents"]))
    if K.characteristic == 0:
        comp = _mq_compositum(K, L)
        if comp is not None:
            n = comp["n"]
            total = K.degree() * L.degree()
            each = total // n
            degs = [f.residue_degree * L.degree() for f in dec.factors]
            ok = len(dec.factors) == n and all(d == each for d in degs)
            comp.update({"factor_count": len(dec.factors), "factor_degrees_over_base": degs,
                         "product_check": f"{total} = {n}*{each}", "agrees": ok})
            v.details["copies"] = comp
            cert.rule("product of n copies",
                      f"n = [{K.name} ∩ {L.name} : {K.root.name}] = {n}; {len(dec.factors)} factors of degree {each} over {K.root.name}")
            if not ok:
                raise ConsistencyFailure("factor count disagrees with [K ∩ L : k]")
            cert.witnesses.append(DataWitness("intersection_degree", {"n": n, "basis": comp["intersection_basis"]}))
    return v


# -----------------------------------------------------------------------------
# the regular query
# -----------------------------------------------------------------------------

def check_regular(K: FieldTower, L: FieldTower, *, strict: bool = False) -> Verdict:
    """Dispatch: separable factor, then a split factor for the degree criterion."""
    _check_base(K, L)
    pk, pl = classify(K), classify(L)
    if pk.shape is Shape.SEPARABLE_ONLY:
        return check_lemma1(K, L)
    if pl.shape is Shape.SEPARABLE_ONLY:
        return check_lemma1(L, K)
    if pk.splittable:
        return check_theorem2(K, L, strict=strict)
    if pl.splittable:
        return check_theorem2(L, K, strict=strict)
    return check_theorem2(K, L, strict=strict)


def intersect_fields(K: FieldTower, L: FieldTower) -> Verdict:
    """K ∩ L, compared with the common base."""
    _check_base(K, L)
    cert = Certificate()
    v = Verdict(None, certificate=cert)
    if K.is_ambient and L.is_ambient:
        ks, ls = K.ambient_spec(), L.ambient_spec()
        k_spec = K.root.ambient
        keep = ks.vars() & ls.vars()
        Kc, Lc = ik.restrict_field(ks, keep), ik.restrict_field(ls, keep)
        if Kc.ctx != Lc.ctx:
            raise ik.ContextMismatch("restricted fields landed in different contexts")
        ctx = Kc.ctx
        inter = ik.intersect(Kc, Lc)
        kb = ik.basis_of(k_spec, ctx)
        eq = inter == kb
        cert.rule("subfield intersection", f"echelon intersection of {K.name} and {L.name} over the p-power base of {ctx.describe()}")
        data = {"dim_intersection": inter.dim, "dim_k": kb.dim, "intersection_basis": _basis_strings(inter),
                "equals_base": eq, "relative_degree": inter.dim // kb.dim}
        cert.witnesses.append(DataWitness("field_intersection", data))
        v.details.update(data)
        return v
    comp = _mq_compositum(K, L) if K.characteristic == 0 else None
    if comp is None:
        raise AmbientUnavailable("intersections are computed for ambient towers and multiquadratic fields")
    cert.rule("subfield intersection", f"linear algebra in the compositum {comp['compositum']}")
    data = {"relative_degree": comp["n"], "intersection_basis": comp["intersection_basis"], "equals_base": comp["n"] == 1}
    cert.witnesses.append(DataWitness("field_intersection", data))
    v.details.update(data)
    return v


def decompose(K: FieldTower, L: FieldTower) -> Verdict:
    """Explicit local decomposition of the finite tensor product, with a verdict read off it."""
    _check_base(K, L)
    if K.td() > 0 and L.td() == 0:
        K, L = L, K
    prof = classify(K)
    if prof.shape is Shape.SEPARABLE_ONLY and K.td() == 0 and not K.is_ambient:
        return check_separable_algebraic(K, L)
    cert = Certificate()
    v = Verdict(None, certificate=cert)
    v.noetherian = _noetherian_fields(cert, K, L)
    v.krull_dim = _dimension_rule(cert, K, L)
    A = ta.build_tensor(K, L)
    dec = ta.decompose_local(A)
    v.details["decomposition"] = ta.summarize(dec)
    v.regular = Regularity.YES if dec.regular else Regularity.NO
    _direct_witnesses(cert, dec)
    return v


def _direct_witnesses(cert: Certificate, dec: ta.Decomposition):
    A = dec.algebra
    for f in dec.factors:
        if f.edim != f.krull_dim:
            gen = A.to_str(f.max_ideal_generators[0]) if f.max_ideal_generators else "?"
            cert.witnesses.append(NilpotentWitness(gen, f.edim, f.krull_dim, f.nilpotency_index))
    cert.rule("embedding dimension test",
              "every local factor has edim = Krull dim = 0" if dec.regular else "a local factor has edim > Krull dim = 0")
    if len(dec.factors) > 1:
        cert.witnesses.append(IdempotentWitness([A.to_str(e) for e in dec.idempotents]))


def regular_direct(K: FieldTower, L: FieldTower) -> bool:
    if K.td() > 0:
        K, L = L, K
    return ta.regular_direct(ta.build_tensor(K, L))


def cross_validate(K: FieldTower, L: FieldTower) -> Verdict:
    """Theorem engine against the explicit algebra; disagreement is a bug."""
    _check_base(K, L)
    if K.td() > 0 and L.td() > 0:
        raise ta.NotAlgebraic("neither factor is algebraic; the tensor product is not built explicitly")
    pk, pl = classify(K), classify(L)
    if pk.shape is Shape.SEPARABLE_ONLY and K.td() == 0 and not K.is_ambient:
        ev = check_separable_algebraic(K, L)
    elif pl.shape is Shape.SEPARABLE_ONLY and L.td() == 0 and not L.is_ambient:
        ev = check_separable_algebraic(L, K)
    else:
        ev = check_regular(K, L)
    if ev.regular is Regularity.HYPOTHESIS_NOT_VERIFIED:
        raise UnsplitTower("the theorem engine could not certify its hypotheses; nothing to compare")
    alg, other = (K, L) if K.td() == 0 else (L, K)
    A = ta.build_tensor(alg, other)
    dec = ta.decompose_local(A)
    direct = Regularity.YES if dec.regular else Regularity.NO
    if direct is not ev.regular:
        raise ConsistencyFailure(
            f"engine says {ev.regular.value}, direct computation says {direct.value}", ev, ta.summarize(dec))
    ev.certificate.rule("cross-validation", f"explicit algebra of dimension {A.dim} agrees: {direct.value}")
    _direct_witnesses(ev.certificate, dec)
    ev.details["direct"] = ta.summarize(dec)
    return ev


# -----------------------------------------------------------------------------
# algebras given by descriptors
# -----------------------------------------------------------------------------

@dataclass
class AlgebraDescriptor:
    name: str
    regular: Optional[bool] = None
    residually_separable: Optional[bool] = None
    finitely_generated: Optional[bool] = None
    geometrically_regular: Optional[bool] = None
    residue_fields: list = field(default_factory=list)
    noetherian: Optional[bool] = None
    is_field: bool = False

    @classmethod
    def of_field(cls, K: FieldTower) -> AlgebraDescriptor:
        prof = classify(K)
        rs = True if prof.shape is Shape.SEPARABLE_ONLY else (False if prof.generators else None)
        return cls(K.name, regular=True, residually_separable=rs, finitely_generated=True,
                   geometrically_regular=rs, residue_fields=[K], noetherian=True, is_field=True)

    def is_noetherian(self) -> Optional[bool]:
        if self.noetherian is not None:
            return self.noetherian
        if self.regular or self.finitely_generated:
            return True
        return None


ASSERTIONS = ("i", "ii", "iii", "iv", "v")
_ASSERTION_TEXT = {
    "i": "A, B and every fiber κ_A(P) (x) κ_B(Q) are regular",
    "ii": "B and every A (x) κ_B(Q) are regular",
    "iii": "A and every κ_A(P) (x) B are regular",
    "iv": "A (x) B is regular",
    "v": "A and B are regular",
}


def _residual_separability(d: AlgebraDescriptor, cert: Certificate) -> Optional[bool]:
    if d.residue_fields:
        bad = []
        for R in d.residue_fields:
            prof = classify(R)
            if prof.shape is not Shape.SEPARABLE_ONLY:
                bad.append((R.name, prof.shape.value))
        if bad:
            if d.residually_separable:
                raise InsufficientDescriptors(
                    f"{d.name} is declared residually separable but {bad[0][0]} is {bad[0][1]}")
            cert.rule("residual separability check",
                      f"{d.name}: residue field {bad[0][0]} is not certified separable ({bad[0][1]})")
            return False if any(s != Shape.UNSPLIT.value for _, s in bad) else None
        if d.residually_separable is not False:
            cert.rule("residual separability check",
                      f"{d.name}: every listed residue field ({', '.join(R.name for R in d.residue_fields)}) is separable")
            return True if d.residually_separable or d.is_field else d.residually_separable
    if d.residually_separable is not None:
        cert.assumptions.append(f"{d.name} residually separable = {str(d.residually_separable).lower()} (declared)")
    return d.residually_separable


def check_theorem3(A: AlgebraDescriptor, B: AlgebraDescriptor, assume: Sequence[str] = (),
                   assume_noetherian: bool = False) -> Verdict:
    cert = Certificate()
    v = Verdict(None, certificate=cert)
    status: dict[str, Optional[bool]] = {a: None for a in ASSERTIONS}
    for d in (A, B):
        for flag in ("regular", "finitely_generated", "geometrically_regular"):
            val = getattr(d, flag)
            if val is not None and not d.is_field:
                cert.assumptions.append(f"{d.name} {flag.replace('_', ' ')} = {str(val).lower()} (declared)")
    for a in assume:
        if a not in ASSERTIONS:
            raise InsufficientDescriptors(f"unknown assertion {a!r}")
        status[a] = True
        cert.assumptions.append(f"assertion ({a}) holds (declared): {_ASSERTION_TEXT[a]}")

    # Noetherianity of A (x) B
    if assume_noetherian:
        v.noetherian = Noetherian.YES
        cert.assumptions.append(f"{A.name} (x) {B.name} is Noetherian (declared)")
        cert.rule("Noetherian hypothesis", "declared")
    else:
        rule = None
        if B.finitely_generated and A.is_noetherian():
            rule = f"{B.name} is finitely generated and {A.name} is Noetherian, so {A.name} (x) {B.name} is a finitely generated {A.name}-algebra"
        elif A.finitely_generated and B.is_noetherian():
            rule = f"{A.name} is finitely generated and {B.name} is Noetherian, so {A.name} (x) {B.name} is a finitely generated {B.name}-algebra"
        if rule is None:
            v.regular = Regularity.HYPOTHESIS_NOT_VERIFIED
            cert.rule("Noetherian hypothesis", "not established: declare it or mark a factor finitely generated")
            return v
        v.noetherian = Noetherian.YES
        cert.rule("Hilbert basis Noetherian rule", rule)

    rs_a = _residual_separability(A, cert)
    rs_b = _residual_separability(B, cert)
    rs = bool(rs_a) or bool(rs_b)
    v.details["residually_separable"] = {A.name: rs_a, B.name: rs_b}

    # (v) from declarations
    if A.regular is not None and B.regular is not None:
        status["v"] = A.regular and B.regular if status["v"] is None else status["v"]
        if not (A.regular and B.regular):
            status["v"] = False

    # fibers
    fibers = []
    if A.residue_fields and B.residue_fields:
        for RA in A.residue_fields:
            for RB in B.residue_fields:
                fv = check_regular(RA, RB)
                fibers.append({"fiber": f"{RA.name} (x) {RB.name}", "verdict": fv.regular.value,
                               "rules": fv.certificate.rule_names(),
                               "witnesses": [w.to_json() for w in fv.certificate.witnesses
                                             if not isinstance(w, SeparabilityWitness)]})
        cert.assumptions.append("listed residue fields cover every prime of each algebra (declared)")
        verdicts = [f["verdict"] for f in fibers]
        cert.rule("fiber computation", "; ".join(f"{f['fiber']}: {f['verdict']}" for f in fibers))
        if Regularity.NO.value in verdicts:
            status["i"] = False
        elif all(x == Regularity.YES.value for x in verdicts) and status["v"]:
            status["i"] = True
    v.details["fibers"] = fibers

    # propagation
    def forward():
        changed = True
        while changed:
            changed = False
            rules = []
            if status["i"] is True:
                rules += [("ii", True), ("iii", True)]
            if status["ii"] is True or status["iii"] is True:
                rules.append(("iv", True))
            if status["iv"] is True:
                rules.append(("v", True))
            if status["v"] is False:
                rules.append(("iv", False))
            if status["iv"] is False:
                rules += [("ii", False), ("iii", False)]
            if status["ii"] is False or status["iii"] is False:
                rules.append(("i", False))
            for a, val in rules:
                if status[a] is None:
                    status[a] = val
                    changed = True
                elif status[a] != val:
                    raise InsufficientDescriptors(f"assertion ({a}) is both established and refuted: inconsistent declarations")

    forward()
    cert.rule("forward implication chain", "(i) => (ii), (iii) => (iv) => (v), applied from the established assertions")
    if rs:
        anchor = next((status[a] for a in ("v", "iv", "i", "ii", "iii") if status[a] is not None), None)
        if anchor is not None:
            for a in ASSERTIONS:
                if status[a] is None:
                    status[a] = anchor
                elif status[a] != anchor:
                    raise InsufficientDescriptors("residual separability makes all assertions equivalent, but they disagree")
        who = A.name if rs_a else B.name
        cert.rule("residually-separable equivalence",
                  f"{who} is residually separable, so all five assertions are equivalent: {A.name} (x) {B.name} is regular exactly when {A.name} and {B.name} are")
    if status["i"] is False and (status["ii"] or status["iii"]):
        which = "ii" if status["ii"] else "iii"
        cert.rule("non-reversibility",
                  f"assertion ({which}) holds while (i) fails: ({which}) does not imply (i)")
    if all(status[a] is None for a in ASSERTIONS):
        raise InsufficientDescriptors("no assertion of the chain could be established or refuted")
    v.details["assertions"] = {a: ("established" if s else "fails" if s is False else "unknown")
                               for a, s in status.items()}
    if status["iv"] is True:
        v.regular = Regularity.YES
    elif status["iv"] is False:
        v.regular = Regularity.NO
    else:
        v.regular = Regularity.HYPOTHESIS_NOT_VERIFIED
    return v


def replay(w) -> bool:
    """Recompute a witness from its towers; witnesses without a replay are data only."""
    fn = getattr(w, "replay", None)
    return True if fn is None else fn()
