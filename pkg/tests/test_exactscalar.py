from fractions import Fraction

import pytest

from regtensor.exactscalar import GF, QQ, DivisionByZero, Fp, ModulusMismatch, frobenius_scalar, is_prime, rational


def test_rational_sum():
    assert rational(1, 2) + rational(1, 3) == Fraction(5, 6)
    assert QQ.add(QQ.convert(Fraction(1, 2)), QQ.convert(Fraction(1, 3))) == Fraction(5, 6)


def test_char_two_addition():
    assert Fp(1, 2) + Fp(1, 2) == Fp(0, 2)
    assert GF(2).add(1, 1) == 0


def test_inverse_mod_three():
    # brute force over residues: 2*2 = 4 = 1 mod 3
    assert Fp(2, 3).inverse() == Fp(2, 3)
    assert GF(3).inv(2) == 2


@pytest.mark.parametrize("p,a", [(2, 1), (3, 2), (5, 3)])
def test_frobenius_scalar(p, a):
    assert frobenius_scalar(Fp(a, p)) == Fp(a, p)


def test_zero_division():
    with pytest.raises(DivisionByZero):
        Fp(0, 5).inverse()
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        GF(7).inv(0)


def test_mixed_moduli_rejected():
    with pytest.raises(ModulusMismatch):
        Fp(1, 3) + Fp(1, 5)


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError):
        GF(4)
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_fraction_image_in_prime_field():
    assert GF(5).convert(Fraction(1, 2)) == 3
    with pytest.raises(DivisionByZero):
        GF(5).convert(Fraction(1, 5))
