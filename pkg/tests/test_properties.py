"""Randomized invariants. Each hypothesis suite runs at least 100 examples."""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from regtensor import engine as en
from regtensor import factoracle as fo
from regtensor import insepkernel as ik
from regtensor import tensoralgebra as ta
from regtensor.exactscalar import GF, QQ, Fp, is_prime
from regtensor.polyrat import MultiPoly, RatFunc, RatFuncField, UniPoly, pth_power_test, separability_split, uni_gcd
from families import instance
from towers_util import rationals, sqrts

SUITE = settings(max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow])
PRIMES = st.sampled_from([2, 3, 5, 7])
fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


# -- scalars -----------------------------------------------------------------

@SUITE
@given(fractions, fractions, fractions)
def test_rational_field_axioms(a, b, c):
    assert QQ.add(QQ.add(a, b), c) == QQ.add(a, QQ.add(b, c))
    if a != 0:
        assert QQ.mul(a, QQ.inv(a)) == 1


@pytest.mark.parametrize("p", [p for p in range(2, 18) if is_prime(p)])
def test_fermat_exhaustive(p):
    assert all(Fp(x, p) ** p == Fp(x, p) for x in range(p))


# -- polynomials ---------------------------------------------------------------

def _uni(draw_coeffs, p):
    F = GF(p)
    return UniPoly(F, [F.convert(c) for c in draw_coeffs])


@st.composite
def finite_polys(draw, nonzero=True):
    p = draw(PRIMES)
    cs = draw(st.lists(st.integers(0, p - 1), min_size=2, max_size=7))
    if nonzero and all(c == 0 for c in cs[1:]):
        cs[-1] = 1
    return p, _uni(cs, p)


@SUITE
@given(finite_polys(), st.lists(st.integers(0, 6), min_size=1, max_size=6))
def test_uni_gcd_divides_and_cofactors_coprime(pf, gcs):
    p, f = pf
    g = _uni([c % p for c in gcs], p)
    if g.is_zero():
        g = _uni([1], p)
    d = uni_gcd(f, g)
    assert (f % d).is_zero() and (g % d).is_zero()
    assert uni_gcd(f.exact_div(d), g.exact_div(d)).is_constant()


@SUITE
@given(finite_polys())
def test_factorization_remultiplies(pf):
    p, f = pf
    lc, facs = fo.factor_finite_field(f)
    assert fo.multiply_factors(f.field, lc, facs) == f
    assert all(fo.rabin_irreducible(g) for g, _ in facs)


@st.composite
def small_ratfuncs(draw, p=None, vars_=("x", "y")):
    p = p or draw(st.sampled_from([2, 3, 5]))
    dom = GF(p)

    def poly():
        terms = draw(st.dictionaries(st.tuples(*[st.integers(0, 3)] * len(vars_)), st.integers(1, p - 1),
                                     min_size=1, max_size=3))
        return MultiPoly(dom, vars_, terms)

    return p, RatFunc(poly(), poly())


@SUITE
@given(small_ratfuncs())
def test_pth_power_round_trip(pr):
    p, r = pr
    h = r ** p
    root = pth_power_test(h)
    assert root == r
    got = pth_power_test(r)
    if got is not None:
        assert got ** p == r


@SUITE
@given(small_ratfuncs())
def test_ratfunc_normalization_idempotent(pr):
    _, r = pr
    again = RatFunc(r.num, r.den)
    assert again.num == r.num and again.den == r.den and str(again) == str(r)


@SUITE
@given(st.sampled_from([2, 3, 5]), st.integers(1, 4), st.integers(0, 2), st.data())
def test_separability_split_reconstructs(p, d, e, data):
    # Eisenstein at t: g0 = X^d + t*(a_{d-1} X^{d-1} + ... + a_1 X) + t*c is irreducible and
    # so is g0(X^(p^e)); the split must return exactly (g0, e).
    if d % p == 0:
        d += 1
    T = RatFuncField(GF(p), ("t",))
    t = T.var("t")
    mids = data.draw(st.lists(st.integers(0, p - 1), min_size=d - 1, max_size=d - 1))
    c = data.draw(st.integers(1, p - 1))
    g0 = UniPoly(T, [t * c] + [t * a for a in mids] + [T.one])
    f = g0.inflate(p**e)
    g, e2 = separability_split(f)
    assert g.inflate(p**e2) == f
    assert (g, e2) == (g0, e)
    assert uni_gcd(g, g.derivative()).is_constant()


# -- subfields ---------------------------------------------------------------

@st.composite
def subfield_cases(draw):
    p = draw(st.sampled_from([2, 3]))
    vars_ = ("x", "y")[: draw(st.integers(1, 2))]
    exps = {v: draw(st.integers(1, 2 if p == 2 else 1)) for v in vars_}
    ctx = ik.AmbientContext.make(p, vars_, exps)
    dom = GF(p)
    gens = []
    for _ in range(draw(st.integers(0, 2))):
        terms = draw(st.dictionaries(st.tuples(*[st.integers(0, 4)] * len(vars_)), st.integers(1, p - 1),
                                     min_size=1, max_size=2))
        gens.append(RatFunc(MultiPoly(dom, vars_, terms)))
    return p, ctx, gens


@SUITE
@given(subfield_cases())
def test_closure_idempotent_and_dimension_divides(case):
    p, ctx, gens = case
    b = ik.subalgebra_closure(gens, ctx)
    assert ik.closure_of_rows(b.row_dicts(), ctx) == b
    assert p ** sum(ctx.exps) % b.dim == 0
    els = b.elements()
    for g in els[:3]:
        for h in els[:3]:
            assert ik.member(g * h, b)
    full = ik.full_basis(ctx)
    assert ik.intersect(b, full) == b


@SUITE
@given(subfield_cases(), subfield_cases())
def test_intersection_commutes(c1, c2):
    p, ctx, g1 = c1
    if c2[0] != p or c2[1] != ctx:
        g2 = g1[:1]
    else:
        g2 = c2[2]
    b1, b2 = ik.subalgebra_closure(g1, ctx), ik.subalgebra_closure(g2, ctx)
    i = ik.intersect(b1, b2)
    assert i == ik.intersect(b2, b1)
    assert ik.is_subfield_of(i, b1) and ik.is_subfield_of(i, b2)


# -- towers, tensor algebras, verdicts ------------------------------------------------

seeds = st.integers(0, 10**6)


@SUITE
@given(seeds)
def test_degree_multiplicativity(seed):
    inst = instance(seed)
    for T in (inst.K, inst.L):
        n = T.degree()
        for j in range(len(T.steps) + 1):
            E = T.prefix(j)
            assert T.degree(E) * E.degree() == n


@SUITE
@given(seeds)
def test_verdict_symmetry(seed):
    inst = instance(seed)
    a = en.check_regular(inst.K, inst.L).regular
    b = en.check_regular(inst.L, inst.K).regular
    assert a is b


@SUITE
@given(seeds)
def test_idempotents_and_dimensions_char_p(seed):
    inst = instance(seed)
    A = ta.build_tensor(inst.K, inst.L)
    dec = ta.decompose_local(A)
    assert sum(f.dim for f in dec.factors) == A.dim == inst.K.degree()
    total = A.zero()
    for e in dec.idempotents:
        assert A.eq(A.mul(e, e), e)
        total = A.add(total, e)
    assert A.eq(total, A.one())
    for nu in dec.nilradical:
        assert A.is_zero(A.pow(nu, A.dim))


SQRTS = [-1, 2, 3, 5, -3, 6]


@SUITE
@given(st.lists(st.sampled_from(SQRTS), min_size=1, max_size=2, unique=True),
       st.lists(st.sampled_from(SQRTS), min_size=1, max_size=2, unique=True))
def test_idempotents_multiquadratic(ks, ls):
    k = rationals()
    K = sqrts(k, *[(d, f"a{i}") for i, d in enumerate(ks)], name="K")
    L = sqrts(k, *[(d, f"b{i}") for i, d in enumerate(ls)], name="L")
    A = ta.build_tensor(K, L)
    dec = ta.decompose_local(A)
    es = dec.idempotents
    for i, e in enumerate(es):
        assert A.eq(A.mul(e, e), e)
        for f in es[i + 1:]:
            assert A.is_zero(A.mul(e, f))
    total = A.zero()
    for e in es:
        total = A.add(total, e)
    assert A.eq(total, A.one())
    v = en.check_separable_algebraic(K, L)
    assert v.details["copies"]["agrees"]
