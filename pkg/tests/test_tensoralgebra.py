import pytest

from regtensor import tensoralgebra as ta
from towers_util import rationals, reg2_1_1, reg2_3, reg2_5, reg7, sqrts, transcendentals


def test_reg2_3_algebra():
    k, K, L = reg2_3()
    A = ta.build_tensor(K, L)
    assert A.dim == 2
    assert A.relations() == ["X^2 = t^2  (X stands for t (x) 1)"]
    dec = ta.decompose_local(A)
    (f,) = dec.factors
    assert (f.edim, f.nilpotency_index, f.is_field) == (1, 2, False)
    assert [A.to_str(g) for g in dec.nilradical] == ["X + t"]
    assert not dec.is_reduced and not dec.regular


def test_nilradical_elements_are_nilpotent():
    k, K, L = reg2_3()
    A = ta.build_tensor(K, L)
    dec = ta.decompose_local(A)
    for nu in dec.nilradical:
        assert A.is_zero(A.pow(nu, A.dim))


def test_trivial_tensor():
    k, K, L = reg2_3()
    A = ta.build_tensor(k, L)
    assert A.dim == 1
    dec = ta.decompose_local(A)
    assert dec.is_field and dec.nilradical == []
    assert ta.decompose_local(ta.build_tensor(k, k)).is_field


def test_reg2_5_algebra():
    k, K, L = reg2_5()
    A = ta.build_tensor(K, L)
    assert A.dim == 4
    dec = ta.decompose_local(A)
    assert len(dec.factors) == 2 and dec.is_reduced and dec.regular
    assert all(f.edim == 0 and f.residue_degree == 2 for f in dec.factors)
    es = dec.idempotents
    assert A.eq(A.mul(es[0], es[0]), es[0])
    assert A.is_zero(A.mul(es[0], es[1]))
    assert A.eq(A.add(es[0], es[1]), A.one())


def test_reg2_1_1_truncations_are_fields():
    for m_n in [(1, 1), (1, 2)]:
        k, K, L = reg2_1_1(m_n)
        dec = ta.decompose_local(ta.build_tensor(K, L))
        assert dec.is_field and dec.regular
        assert dec.algebra.dim == K.degree()


def test_reg7_direct():
    k, K, L = reg7()
    dec = ta.decompose_local(ta.build_tensor(K, L))
    assert dec.algebra.dim == 4
    assert not dec.regular and dec.factors[0].edim == 1


def test_symmetry_of_direct_regularity():
    for inst in (reg2_3, reg2_1_1, reg2_5):
        k, K, L = inst()
        assert ta.regular_direct(ta.build_tensor(K, L)) == ta.regular_direct(ta.build_tensor(L, K))


def test_errors():
    k = rationals()
    T = transcendentals(k, "t")
    with pytest.raises(ta.NotAlgebraic):
        ta.build_tensor(T, T)
    k2, K2, _ = reg2_3()
    with pytest.raises(ta.BaseMismatch):
        ta.build_tensor(sqrts(k, (2, "r")), K2)
