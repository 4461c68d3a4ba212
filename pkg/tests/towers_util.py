"""Small constructors shared by the tensor-algebra, engine and property tests."""

from regtensor.exactscalar import GF, QQ
from regtensor.polyrat import parse_ratfunc
from regtensor.towers import (
    FieldTower, adjoin_insep, adjoin_root, adjoin_sqrt, adjoin_transcendental, ambient_root, parse_unipoly, prime_root,
)


def ambient_base(p, vars_, gens, name="k"):
    R = lambda s: parse_ratfunc(s, GF(p), vars_)
    return FieldTower(ambient_root(p, vars_, [R(g) for g in gens], name)), R


def insep(base, R, *elems, name=None):
    T = base
    for e in elems:
        T = adjoin_insep(T, R(e))
    return T.renamed(name) if name else T


def rationals(name="k"):
    return FieldTower(prime_root(QQ, name))


def sqrts(base, *pairs, name=None):
    T = base
    for d, n in pairs:
        T, _ = adjoin_sqrt(T, d, n)
    return T.renamed(name) if name else T


def root(base, name, poly):
    return adjoin_root(base, name, parse_unipoly(base, poly))


def transcendentals(base, *names, name=None):
    T = base
    for n in names:
        T = adjoin_transcendental(T, n)
    return T.renamed(name) if name else T


# the desk instances of the worked examples
def reg2_3():
    k, R = ambient_base(2, ("t",), ["t^2"])
    return k, insep(k, R, "t", name="K"), insep(k, R, "t", name="L")


def reg2_1_1(m_n=(1, 2)):
    if m_n == (1, 1):
        k, R = ambient_base(2, ("x", "y"), ["x^2", "y^2"])
        return k, insep(k, R, "x", name="K"), insep(k, R, "y", name="L")
    k, R = ambient_base(2, ("y1", "x1", "x2"), ["y1^2", "x1^2", "x2^4"])
    return k, insep(k, R, "x1", "x2", name="K"), insep(k, R, "y1", name="L")


def reg7():
    k, R = ambient_base(2, ("x", "y", "z"), ["x^4", "y^4"])
    K = insep(k, R, "x^2", "y^2", name="K")
    L = adjoin_insep(adjoin_transcendental(k, "z"), R("x^2*(y^2+z)")).renamed("L")
    return k, K, L


def reg4():
    k, R = ambient_base(2, ("u",), ["u^4"])
    return k, insep(k, R, "u", name="Ku"), insep(k, R, "u^2", name="Ku2")


def reg2_5():
    k = rationals()
    K = sqrts(k, (-1, "i"), (3, "s3"), name="K")
    L = sqrts(k, (-1, "i"), (2, "r2"), name="L")
    return k, K, L
