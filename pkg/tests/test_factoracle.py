from fractions import Fraction

import pytest

from regtensor import factoracle as fo
from regtensor.exactscalar import GF, QQ
from regtensor.polyrat import RatFuncField, UniPoly


def up(F, coeffs):
    return UniPoly(F, [F.convert(c) for c in coeffs])


# -- finite fields -----------------------------------------------------------

def test_finite_field_examples():
    F2, F3 = GF(2), GF(3)
    lc, facs = fo.factor_finite_field(up(F2, [1, 0, 1]))
    assert facs == [(up(F2, [1, 1]), 2)]
    res = fo.decide(up(F2, [1, 1, 1]), fo.finite_view(F2))
    assert res.irreducible and fo.verify_certificate(res.cert, up(F2, [1, 1, 1]))
    lc, facs = fo.factor_finite_field(up(F3, [0, -1, 0, 1]))
    assert sorted(str(g) for g, _ in facs) == sorted(["X", "X + 1", "X + 2"])
    assert all(m == 1 for _, m in facs)


def test_factorization_is_seeded():
    f = up(GF(5), [1, 0, 0, 0, 0, 0, 0, 0, 1])  # X^8 + 1 over F_5
    assert fo.factor_finite_field(f, seed=0) == fo.factor_finite_field(f, seed=0)


# -- binomials over function fields -----------------------------------------------

def _binomial(T, n, a):
    return UniPoly.monomial(T, n) - UniPoly.const(T, a)


def test_binomial_examples():
    T = RatFuncField(GF(2), ("t",))
    t = T.var("t")
    view = fo.ratfunc_root_view(T)
    irr, cert = fo.binomial_irreducible(2, 1, t, view)
    assert irr and fo.verify_certificate(cert, _binomial(T, 2, t))
    irr, cert = fo.binomial_irreducible(2, 1, t * t, view)
    assert not irr
    assert fo.binomial_factor(cert) == UniPoly.x(T) - UniPoly.const(T, t)
    assert fo.verify_certificate(cert, _binomial(T, 2, t * t))
    irr, cert = fo.binomial_irreducible(2, 2, t, view)
    assert irr


def test_binomial_characteristic_mismatch():
    T = RatFuncField(GF(3), ("t",))
    with pytest.raises(fo.CharMismatch):
        fo.binomial_irreducible(2, 1, T.var("t"), fo.ratfunc_root_view(T))


# -- multiquadratic fields --------------------------------------------------

def test_sqrt_in_multiquadratic_examples():
    assert fo.sqrt_in_multiquadratic(6, [2, 3]) == (Fraction(1), (0, 1))
    assert fo.sqrt_in_multiquadratic(2, [3]) is None
    assert fo.sqrt_in_multiquadratic(4, []) == (Fraction(2), ())


def _quad_over(gens, b, c):
    K = fo.MultiQuadField(gens)
    view = fo.multiquadratic_view(K)
    f = UniPoly(K, [K.convert(Fraction(c)), K.convert(Fraction(b)), K.one])
    return K, view, f


def test_quadratic_examples():
    K, view, f = _quad_over([-1], 0, 1)
    res = fo.decide(f, view)
    assert not res.irreducible
    assert sorted(K.to_str(g.coeff(0)) for g, _ in res.factors) == sorted(["sqrt(-1)", "-sqrt(-1)"])
    assert fo.verify_certificate(res.cert, f)
    K, view, f = _quad_over([2], 0, -3)
    res = fo.decide(f, view)
    assert res.irreducible and fo.verify_certificate(res.cert, f)
    K, view, f = _quad_over([-3], 1, 1)
    res = fo.decide(f, view)
    assert not res.irreducible and len(res.factors) == 2


def test_invalid_generators():
    with pytest.raises(fo.BadGenerators):
        fo.MultiQuadField([2, 8])
