import pytest

from regtensor import insepkernel as ik
from regtensor.exactscalar import GF
from regtensor.polyrat import RatFunc, parse_ratfunc

XYZ = ("x", "y", "z")


def R(text, vars_=XYZ):
    return parse_ratfunc(text, GF(2), vars_)


def ctx_of(vars_, exps, ambient=XYZ):
    return ik.AmbientContext.make(2, ambient, dict(zip(vars_, exps)))


def coord(elem, ctx, mono):
    return ik.decompose(elem, ctx)[ctx.index[mono]]


def U(text, ctx):
    return parse_ratfunc(text, GF(2), ctx.u_vars)


# -- coordinates over B0 ------------------------------------------------------

def test_coordinates():
    ctx = ctx_of(("x", "y"), (2, 2), ("x", "y"))
    assert coord(R("x^2*y", ("x", "y")), ctx, (2, 1)) == U("1", ctx)
    assert coord(R("x^5", ("x", "y")), ctx, (1, 0)) == RatFunc.var(GF(2), ctx.u_vars, "x^4")
    one_over = coord(R("1/x", ("x", "y")), ctx, (3, 0))
    assert one_over == RatFunc.var(GF(2), ctx.u_vars, "x^4").inverse()
    h = R("(x+y)/(x^3+y)", ("x", "y"))
    row, den = ik.element_row(h, ctx)
    assert ik.row_to_element(row, ctx, den) == h


# -- closure -----------------------------------------------------------------

def test_closure_examples():
    ctx = ctx_of(("x",), (2,), ("x",))
    assert ik.subalgebra_closure([], ctx).dim == 1
    b = ik.subalgebra_closure([R("x^2", ("x",))], ctx)
    assert b.dim == 2 and b.describe() == ["1", "x^2"]


def test_reg7_field_dimension():
    ctx = ctx_of(XYZ, (2, 2, 2))
    L = ik.subalgebra_closure([R("x^2*(y^2+z)"), R("z")], ctx)
    assert L.dim == 8


def test_membership():
    ctx = ctx_of(XYZ, (2, 2, 2))
    Lx2 = ik.subalgebra_closure([R("x^2*(y^2+z)"), R("z"), R("x^2")], ctx)
    assert ik.member(R("y^2"), Lx2)
    kx2 = ik.subalgebra_closure([R("x^2")], ctx)
    assert not ik.member(R("y^2"), kx2)
    assert ik.member(R("1"), kx2)


def test_intersection_and_degree():
    ctx = ctx_of(("t",), (2,), ("t",))
    Ft = ik.full_basis(ctx)
    Ft2 = ik.subalgebra_closure([R("t^2", ("t",))], ctx)
    assert ik.intersect(Ft, Ft2) == Ft2 and ik.intersect(Ft2, Ft2) == Ft2
    assert ik.relative_degree(Ft2, Ft) == 2
    ctx3 = ctx_of(XYZ, (2, 2, 2))
    L = ik.subalgebra_closure([R("x^2*(y^2+z)"), R("z")], ctx3)
    LS = ik.subalgebra_closure([R("x^2*(y^2+z)"), R("z"), R("x^2"), R("y^2")], ctx3)
    assert (LS.dim, L.dim, ik.relative_degree(L, LS)) == (16, 8, 2)
    with pytest.raises(ik.NotASubfield):
        ik.relative_degree(LS, ik.subalgebra_closure([R("x")], ctx3))


# -- base certification and descent ---------------------------------------------

def test_certify_base():
    spec = ik.certify_base(2, XYZ, [R("x^4"), R("y^4")])
    assert spec.support == (("x", 2), ("y", 2))
    with pytest.raises(ik.AmbientUnavailable):
        ik.certify_base(2, XYZ, [R("x^4"), R("x*y")])


def test_insep_exponent():
    spec = ik.certify_base(2, XYZ, [R("x^4"), R("y^4")])
    assert ik.insep_exponent(R("x^2*y^2"), spec) == 1
    assert ik.insep_exponent(R("x*y^2"), spec) == 2
    assert ik.insep_exponent(R("x^4+y^4"), spec) == 0


def test_restrict_field_removes_transcendental_base_change():
    # L = k(z, x^2(y^2+z)) meets F_2(x, y) in k itself, not in k(z)-linear combinations
    k = ik.certify_base(2, XYZ, [R("x^4"), R("y^4")])
    Lspec = k.with_generators([R("z"), R("x^2*(y^2+z)")], {"z": 0})
    down = ik.restrict_field(Lspec, {"x", "y"})
    assert down.dim == 1
    LS = Lspec.with_generators([R("x^2")])
    down = ik.restrict_field(LS, {"x", "y"})
    assert sorted(down.describe()) == sorted(["1", "x^2", "y^2", "x^2*y^2"])
