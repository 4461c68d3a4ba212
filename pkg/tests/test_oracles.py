"""Cross-checks against sympy, used here only as an independent oracle."""

import pytest
import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from regtensor import factoracle as fo
from regtensor import insepkernel as ik
from regtensor import tensoralgebra as ta
from regtensor.exactscalar import GF
from regtensor.polyrat import MultiPoly, RatFunc, UniPoly, multi_gcd
from regtensor.towers import minpoly_of_element
from towers_util import rationals, reg2_5, sqrts

SUITE = settings(max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow])
VARS = ("x", "y", "z")
SX = sympy.symbols(VARS)
T = sympy.Symbol("T")


def to_sympy(f: MultiPoly, p: int) -> sympy.Poly:
    expr = sum(int(c) * sympy.Mul(*[v**e for v, e in zip(SX, exp)]) for exp, c in f.terms.items())
    return sympy.Poly(expr, *SX, modulus=p)


def uni_to_sympy(f: UniPoly, p: int | None = None) -> sympy.Poly:
    coeffs = [sympy.Rational(str(c)) if p is None else int(c) for c in reversed(f.coeffs)]
    return sympy.Poly(coeffs, T) if p is None else sympy.Poly(coeffs, T, modulus=p)


@st.composite
def multipolys(draw, p, max_deg=4, max_terms=5):
    nv = draw(st.integers(1, 3))
    exps = st.tuples(*[st.integers(0, max_deg)] * nv).map(lambda e: e + (0,) * (3 - nv))
    terms = draw(st.dictionaries(exps, st.integers(1, p - 1), min_size=1, max_size=max_terms))
    return MultiPoly(GF(p), VARS, terms)


@st.composite
def gcd_cases(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    common = draw(multipolys(p, 3, 3))
    return p, common * draw(multipolys(p)), common * draw(multipolys(p))


@SUITE
@given(gcd_cases())
def test_multivariate_gcd_matches_sympy(case):
    p, f, g = case
    ours = to_sympy(multi_gcd(f, g), p)
    theirs = sympy.gcd(to_sympy(f, p), to_sympy(g, p))
    assert ours.monic() == theirs.monic()


@SUITE
@given(gcd_cases())
def test_exact_division_recovers_cofactor(case):
    p, f, g = case
    d = multi_gcd(f, g)
    q = f.exact_div(d)
    assert q * d == f
    assert to_sympy(q, p) == sympy.div(to_sympy(f, p), to_sympy(d, p))[0]


@st.composite
def finite_unipolys(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    cs = draw(st.lists(st.integers(0, p - 1), min_size=2, max_size=9))
    if all(c == 0 for c in cs[1:]):
        cs[-1] = 1
    F = GF(p)
    return p, UniPoly(F, [F.convert(c) for c in cs])


# sympy's own factor sorting trips its modular-integer deprecation warning
@pytest.mark.filterwarnings("ignore::DeprecationWarning")
@SUITE
@given(finite_unipolys())
def test_factorization_matches_sympy(case):
    p, f = case
    _, facs = fo.factor_finite_field(f)
    ours = sorted((str(uni_to_sympy(g, p).monic().all_coeffs()), m) for g, m in facs)
    _, theirs = sympy.factor_list(uni_to_sympy(f, p))
    theirs = sorted((str(g.monic().all_coeffs()), m) for g, m in theirs)
    assert ours == theirs


@st.composite
def ambient_pairs(draw):
    p = draw(st.sampled_from([2, 3]))
    ctx = ik.AmbientContext.make(p, VARS[:2], {"x": draw(st.integers(1, 2)), "y": 1})
    dom = GF(p)

    def elem():
        num = draw(st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 4)), st.integers(1, p - 1),
                                   min_size=1, max_size=4))
        den = draw(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 2)), st.integers(1, p - 1),
                                   min_size=1, max_size=2))
        return RatFunc(MultiPoly(dom, VARS[:2], num), MultiPoly(dom, VARS[:2], den))

    return ctx, elem(), elem()


@SUITE
@given(ambient_pairs())
def test_row_field_matches_ambient_arithmetic(case):
    ctx, a, b = case
    R = ik.RowField(ctx)
    ra, rb = R.of(a), R.of(b)
    assert R.to_ratfunc(R.add(ra, rb)) == a + b
    assert R.to_ratfunc(R.mul(ra, rb)) == a * b
    assert R.is_zero(R.add(ra, R.neg(ra)))


def test_multiquadratic_minimal_polynomials_match_sympy():
    T2 = sqrts(rationals(), (2, "sqrt2"), (3, "sqrt3"), (5, "sqrt5"))
    cases = {
        "sqrt2 + sqrt3": sympy.sqrt(2) + sympy.sqrt(3),
        "sqrt2*sqrt3 + sqrt5": sympy.sqrt(6) + sympy.sqrt(5),
        "sqrt2 + sqrt3 + sqrt5": sympy.sqrt(2) + sympy.sqrt(3) + sympy.sqrt(5),
        "1 + sqrt2*sqrt5": 1 + sympy.sqrt(10),
    }
    for text, alg in cases.items():
        ours = uni_to_sympy(minpoly_of_element(T2, T2.parse(text)))
        assert ours.monic() == sympy.Poly(sympy.minimal_polynomial(alg, T), T).monic(), text


def test_multiquadratic_tensor_split_matches_sympy():
    # K (x) L = L[X]/(m) for m the minimal polynomial of a primitive element of K
    _, K, L = reg2_5()
    dec = ta.decompose_local(ta.build_tensor(K, L))
    m = sympy.minimal_polynomial(sympy.I + sympy.sqrt(3), T)
    _, facs = sympy.factor_list(m, extension=[sympy.I, sympy.sqrt(2)])
    assert sorted(f.residue_degree for f in dec.factors) == sorted(sympy.degree(g, T) for g, _ in facs)
