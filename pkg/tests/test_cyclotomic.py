from fractions import Fraction

import pytest

from heyde import DeterministicStream, from_rational, from_terms, zeta
from heyde.cyclotomic import cyclotomic_polynomial


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)  # x^6 + x^3 + 1
    assert len(cyclotomic_polynomial(15)) - 1 == 8  # phi(15)
    assert len(cyclotomic_polynomial(45)) - 1 == 24  # phi(45)


def test_zeta_basics():
    assert zeta(9, 0).is_one()
    assert (zeta(3, 1) * zeta(3, 2)).is_one()
    total = zeta(9, 3) + zeta(9, 6) + zeta(9, 0)  # the three cube roots of unity
    assert total.is_zero()
    assert abs(total.to_complex()) < 1e-12


def test_conjugation_negates_exponent():
    assert zeta(9, 1).conj() == zeta(9, 8)
    assert zeta(9, 0).conj() == zeta(9, 0)


def test_additive_identity():
    a = from_terms(9, [(1, 1), (4, 2)], 3)
    assert a + 0 == a
    assert a - a == from_rational(9, 0)


def test_squared_modulus_expansion():
    # a = (1 + zeta_9)/2; |a|^2 = (2 + zeta + zeta^8)/4 expanded symbolically
    a = (zeta(9, 0) + zeta(9, 1)) * Fraction(1, 2)
    expected = from_terms(9, [(0, 2), (1, 1), (8, 1)], 4)
    product = a * a.conj()
    assert product == expected
    assert abs(product.to_complex() - abs(a.to_complex()) ** 2) < 1e-12
    assert not product.is_unit_modulus()
    assert not a.is_unit_modulus()


def test_zero_and_one_predicates():
    assert (zeta(3, 0) + zeta(3, 1) + zeta(3, 2)).is_zero()
    assert zeta(9, 0).is_one()
    assert zeta(9, 5).is_unit_modulus()
    assert (zeta(9, 5) * Fraction(1, 2)).is_unit_modulus() is False


def test_to_complex_and_odd_order_only():
    value = zeta(5, 0).to_complex()
    assert abs(value - 1) < 1e-12
    with pytest.raises(ValueError, match="odd"):
        zeta(4, 1)


def test_rational_detection():
    assert from_rational(9, Fraction(2, 7)).rational_value() == Fraction(2, 7)
    assert not zeta(9, 1).is_rational()
    # zeta_3 expressed inside Q(zeta_9) has a rational trace with conj
    b = zeta(9, 3) + zeta(9, 6)
    assert b.is_rational() and b.rational_value() == -1


def test_ring_identities_random():
    stream = DeterministicStream(2024, label="ring")

    def random_element():
        terms = [(stream.randint(0, 8), stream.randint(-4, 4)) for _ in range(3)]
        return from_terms(9, terms, stream.randint(1, 6))

    for _ in range(2000):
        a, b, c = random_element(), random_element(), random_element()
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert (a * b).conj() == a.conj() * b.conj()


def test_times_root_matches_multiplication():
    stream = DeterministicStream(99, label="shift")
    for _ in range(200):
        a = from_terms(45, [(stream.randint(0, 44), stream.randint(-3, 3)) for _ in range(3)], 2)
        t = stream.randint(0, 44)
        assert a.times_root(t) == a * zeta(45, t)


def test_float_agrees_with_exact_predicates():
    stream = DeterministicStream(7, label="float")
    for _ in range(1000):
        terms = [(stream.randint(0, 8), stream.randint(0, 3)) for _ in range(4)]
        den = sum(c for _, c in terms)
        if den == 0:
            continue
        a = from_terms(9, terms, den)  # a convex combination of roots of unity
        value = abs(a.to_complex())
        if a.is_zero():
            assert value < 1e-9
        if a.is_unit_modulus():
            assert abs(value - 1) < 1e-9
        else:
            assert abs(value - 1) > 1e-9


def test_real_sign():
    positive = zeta(9, 1) + zeta(9, 8)  # 2 cos(2 pi / 9) > 0
    negative = zeta(9, 4) + zeta(9, 5)  # 2 cos(8 pi / 9) < 0
    assert positive.real_sign() == 1
    assert negative.real_sign() == -1
    assert from_rational(9, 0).real_sign() == 0
    with pytest.raises(ValueError, match="not real"):
        zeta(9, 1).real_sign()


def test_is_zero_implies_tiny_float():
    a = zeta(45, 9) + zeta(45, 18) + zeta(45, 27) + zeta(45, 36) + zeta(45, 0)
    assert a.is_zero()  # the five fifth roots of unity
    assert abs(a.to_complex()) < 1e-9


def test_order_mismatch_rejected():
    with pytest.raises(ValueError, match="order mismatch"):
        zeta(9, 1) * zeta(3, 1)
