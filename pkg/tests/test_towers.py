import pytest

from regtensor.exactscalar import GF, QQ
from regtensor.factoracle import UncertifiableIrreducibility
from regtensor.polyrat import UniPoly, parse_ratfunc
from regtensor.towers import (
    INF, FieldTower, InfiniteDegree, InvalidStep, NotAPrefix, ReducibleMinPoly, Shape, UnknownName,
    adjoin_insep, adjoin_root, adjoin_sqrt, adjoin_transcendental, ambient_root, classify, element,
    minpoly_of_element, parse_unipoly, prime_root,
)


def ambient(p, vars_, gens):
    R = lambda s: parse_ratfunc(s, GF(p), vars_)
    return FieldTower(ambient_root(p, vars_, [R(g) for g in gens])), R


def rationals():
    return FieldTower(prime_root(QQ))


# -- adjunction --------------------------------------------------------------

def test_binomial_root_over_function_field():
    k, _ = ambient(2, ("t",), ["t^4"])
    K = adjoin_root(k, "t", parse_unipoly(k, "X^4 - t^4"))
    assert K.degree() == 4


def test_sqrt2_and_reducible_minpoly():
    Q = rationals()
    assert adjoin_root(Q, "a", parse_unipoly(Q, "X^2 - 2")).degree() == 2
    with pytest.raises(ReducibleMinPoly) as info:
        adjoin_root(Q, "a", parse_unipoly(Q, "X^2 - 4"))
    assert str(info.value.factor) in ("X - 2", "X + 2")


def test_adjoin_sqrt_skips_redundant_roots():
    Q = rationals()
    K, added = adjoin_sqrt(Q, -1, "i")
    K, added2 = adjoin_root(K, "w", parse_unipoly(K, "X^2 + X + 1")), True
    K, added3 = adjoin_sqrt(K, 3, "s")
    assert added and added2 and not added3
    assert K.degree() == 4


def test_step_errors():
    Q = rationals()
    K = adjoin_transcendental(Q, "t")
    with pytest.raises(InvalidStep):
        adjoin_transcendental(K, "t")
    with pytest.raises(UnknownName):
        K.parse("s + 1")
    with pytest.raises(InvalidStep):
        adjoin_root(Q, "a", parse_unipoly(Q, "X - 2"))
    k, R = ambient(2, ("t",), ["t^2"])
    with pytest.raises(ReducibleMinPoly):
        adjoin_insep(k, R("t^2"))


def test_oracle_gap_is_typed():
    # Artin-Schreier quadratics in characteristic 2 fall outside the oracle classes
    T = adjoin_transcendental(FieldTower(prime_root(GF(2))), "t")
    with pytest.raises(UncertifiableIrreducibility):
        adjoin_root(T, "s", parse_unipoly(T, "X^2 + X + t"))


# -- classification ----------------------------------------------------------

def test_classify_examples():
    k, R = ambient(2, ("t",), ["t^2"])
    prof = classify(adjoin_insep(k, R("t")))
    assert prof.shape is Shape.INSEP_ONLY and prof.insep_exponent == 1
    (g,) = prof.generators
    assert (g.name, g.m, g.a) == ("t", 1, "t^2")
    Q = rationals()
    assert classify(adjoin_root(Q, "a", parse_unipoly(Q, "X^2 - 2"))).shape is Shape.SEPARABLE_ONLY
    Qx = adjoin_transcendental(Q, "x")
    Qa = adjoin_root(Qx, "al", parse_unipoly(Qx, "X^2 - x"))
    assert classify(Qa).shape is Shape.SEPARABLE_ONLY


def test_classify_relative_to_prefix():
    # F_3(t)(t^(1/3)) is purely inseparable over F_3(t) but not over F_3
    k = FieldTower(prime_root(GF(3)))
    T = adjoin_transcendental(k, "t")
    T1 = adjoin_root(T, "a", parse_unipoly(T, "X^3 - t"))
    assert classify(T1, T).shape is Shape.INSEP_ONLY
    assert classify(T1).shape is Shape.UNSPLIT


def test_separable_then_inseparable():
    k, R = ambient(2, ("x", "x1"), ["x1^2"])
    K = adjoin_insep(adjoin_transcendental(k, "x"), R("x1"))
    prof = classify(K)
    assert prof.shape is Shape.SEPARABLE_THEN_INSEP
    assert [g.name for g in prof.generators] == ["x1"]


# -- degrees -----------------------------------------------------------------

def test_degree_examples():
    k, R = ambient(2, ("x", "y"), ["x^4", "y^4"])
    K = k
    for g in ["x^2", "y^2", "x", "y"]:
        K = adjoin_insep(K, R(g))
    assert K.degree() == 16
    E = K.prefix(2)
    assert K.degree(E) * E.degree() == 16
    assert K.degree(K) == 1
    Q = rationals()
    T = adjoin_transcendental(adjoin_transcendental(Q, "x1"), "x2")
    assert T.td() == 2 and T.degree() is INF
    with pytest.raises(NotAPrefix):
        K.degree(T)


# -- minimal polynomials -------------------------------------------------------

def test_minpoly_examples():
    k, R = ambient(2, ("t",), ["t^4"])
    K = adjoin_insep(k, R("t"))
    f = minpoly_of_element(K, K.parse("t^2"))
    assert f == parse_unipoly(k, "X^2 - t^4")
    assert str(minpoly_of_element(K, K.parse("1"))) in ("X - 1", "X + 1")
    Q = rationals()
    K2 = adjoin_root(adjoin_root(Q, "a", parse_unipoly(Q, "X^2 - 2")), "b", parse_unipoly(
        adjoin_root(Q, "a", parse_unipoly(Q, "X^2 - 2")), "X^2 - 3"))
    f = minpoly_of_element(K2, K2.parse("a + b"))
    assert str(f) == "X^4 - 10*X^2 + 1"


def test_minpoly_of_transcendental_tower_fails():
    Q = rationals()
    T = adjoin_transcendental(Q, "t")
    with pytest.raises(InfiniteDegree):
        minpoly_of_element(T, T.parse("t"))


def test_element_arithmetic():
    Q = rationals()
    K = adjoin_root(Q, "a", parse_unipoly(Q, "X^2 - 2"))
    a = element(K, "a")
    assert (a * a - element(K, "2")).value == K.field.zero
    assert str(a * a) == "2"
    assert isinstance(parse_unipoly(K, "X^2 - a"), UniPoly)


def test_describe():
    k, R = ambient(2, ("x",), ["x^4"])
    assert adjoin_insep(k, R("x^2")).describe() == "k(x^2)"
    assert adjoin_insep(k, R("x^2"), "s").describe() == "k(s = x^2)"
