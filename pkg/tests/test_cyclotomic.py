import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckelib.arith import euler_phi
from heckelib.cyclotomic import CyclotomicRational, cyclotomic_polynomial

ORDERS = st.integers(min_value=1, max_value=12)


def _random_element(order, rng_coeffs):
    return CyclotomicRational(order, [Fraction(c, 3) for c in rng_coeffs[:order]])


small_coeffs = st.lists(st.integers(min_value=-9, max_value=9), min_size=12, max_size=12)


def test_cyclotomic_polynomial_degrees():
    for r in range(1, 30):
        poly = cyclotomic_polynomial(r)
        assert len(poly) - 1 == euler_phi(r)
        assert poly[-1] == 1


def test_cyclotomic_polynomial_values():
    # Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1
    assert cyclotomic_polynomial(1) == (Fraction(-1), Fraction(1))
    assert cyclotomic_polynomial(2) == (Fraction(1), Fraction(1))
    assert cyclotomic_polynomial(4) == (Fraction(1), Fraction(0), Fraction(1))
    assert cyclotomic_polynomial(6) == (Fraction(1), Fraction(-1), Fraction(1))


def test_root_of_unity_embeds():
    for r in (1, 2, 3, 5, 8, 12):
        for e in range(r):
            z = CyclotomicRational.root_of_unity(r, e).embed()
            assert cmath.isclose(z, cmath.exp(2j * cmath.pi * e / r), abs_tol=1e-12)


def test_full_root_sum_vanishes():
    for r in (2, 3, 4, 5, 6, 7, 12):
        total = CyclotomicRational.zero(r)
        for e in range(r):
            total = total + CyclotomicRational.root_of_unity(r, e)
        assert total.is_zero()


def test_rationality_detection():
    # zeta_3 + zeta_3^2 = -1
    z = CyclotomicRational.root_of_unity(3, 1) + CyclotomicRational.root_of_unity(3, 2)
    assert z.as_rational() == Fraction(-1)
    assert CyclotomicRational.root_of_unity(5, 2).as_rational() is None


def test_cross_order_equality():
    # zeta_6^3 = -1 = zeta_2
    a = CyclotomicRational.root_of_unity(6, 3)
    b = CyclotomicRational.root_of_unity(2, 1)
    assert a == b
    assert hash(a) == hash(b)


@given(ORDERS, small_coeffs, small_coeffs)
def test_mul_commutes_and_matches_embedding(r, ca, cb):
    a = _random_element(r, ca)
    b = _random_element(r, cb)
    assert a * b == b * a
    got = (a * b).embed()
    want = a.embed() * b.embed()
    assert abs(got - want) <= 1e-9 * (1 + abs(want))


@given(ORDERS, small_coeffs, small_coeffs, small_coeffs)
def test_distributive(r, ca, cb, cc):
    a, b, c = (_random_element(r, x) for x in (ca, cb, cc))
    assert a * (b + c) == a * b + a * c


@given(ORDERS, small_coeffs)
def test_additive_inverse(r, ca):
    a = _random_element(r, ca)
    assert (a - a).is_zero()
    assert a + CyclotomicRational.zero(r) == a


def test_scalar_fast_path():
    a = CyclotomicRational.root_of_unity(8, 3)
    s = CyclotomicRational.from_rational(Fraction(5, 2))
    got = (a * s).embed()
    assert abs(got - 2.5 * cmath.exp(2j * math.pi * 3 / 8)) < 1e-12
