"""Q(ρ_p) 算术"""
from fractions import Fraction

import pytest

from src.algebra.cyclotomic import (
    CycNum,
    cyc_add,
    cyc_conj,
    cyc_inv,
    cyc_mul,
    cyc_neg,
    cyc_norm,
    cyc_sub,
    random_cyc,
)
from src.utils.exceptions import BadExponent, FieldMismatch, UnsupportedPrime, ZeroInversion


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_rho_has_order_p_and_roots_sum_to_zero(p):
    rho = CycNum.rho(p)
    assert rho ** p == 1
    assert rho ** (p - 1) != 1
    total = CycNum.zero(p)
    for i in range(p):
        total = total + CycNum.rho(p, i)
    assert total.is_zero()


def test_top_power_is_reduced():
    # ρ² = -1 - ρ when p = 3
    assert CycNum.rho(3, 2) == CycNum(3, [-1, -1])
    assert CycNum(3, [0, 0, 1]).coeffs == (Fraction(-1), Fraction(-1))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_field_axioms_on_samples(p, rng):
    for _ in range(10):
        a, b, c = (random_cyc(p, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0
        if not a.is_zero():
            assert cyc_mul(a, cyc_inv(a)) == 1
            assert (b / a) * a == b


def test_inverse_examples():
    p = 5
    assert CycNum.rho(p).inverse() == CycNum.rho(p, 4)
    assert CycNum.from_rational(p, 3).inverse() == Fraction(1, 3)
    one_minus = 1 - CycNum.rho(p)
    assert one_minus * one_minus.inverse() == 1


def test_zero_inversion():
    with pytest.raises(ZeroInversion):
        CycNum.zero(5).inverse()
    with pytest.raises(ZeroInversion):
        1 / CycNum.zero(3)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_conjugation_is_a_field_automorphism(p, rng):
    for _ in range(5):
        a, b = random_cyc(p, rng), random_cyc(p, rng)
        for k in range(1, p):
            assert cyc_conj(a * b, k) == cyc_conj(a, k) * cyc_conj(b, k)
            assert cyc_conj(a + b, k) == cyc_conj(a, k) + cyc_conj(b, k)
    assert cyc_conj(CycNum.rho(p), 2) == CycNum.rho(p, 2)


def test_conjugation_rejects_multiples_of_p():
    with pytest.raises(BadExponent):
        CycNum.rho(5).conj(5)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_norm_of_one_minus_rho(p):
    assert cyc_norm(1 - CycNum.rho(p)) == p
    prod = CycNum.one(p)
    for k in range(1, p):
        prod = prod * (1 - CycNum.rho(p, k))
    assert prod == p


@pytest.mark.parametrize("p", [3, 5])
def test_norm_is_multiplicative(p, rng):
    for _ in range(10):
        a, b = random_cyc(p, rng), random_cyc(p, rng)
        assert (a * b).norm() == a.norm() * b.norm()
    assert CycNum.from_rational(p, 2).norm() == 2 ** (p - 1)
    assert CycNum.zero(p).norm() == 0


def test_mixing_fields_raises():
    with pytest.raises(FieldMismatch):
        CycNum.rho(3) + CycNum.rho(5)


def test_unsupported_prime():
    with pytest.raises(UnsupportedPrime):
        CycNum.rho(2)
    with pytest.raises(UnsupportedPrime):
        CycNum(9, [1])


def test_json_strings():
    a = CycNum(5, [Fraction(1, 2), -3, 0, Fraction(7, 4)])
    assert a.to_json() == ["1/2", "-3/1", "0/1", "7/4"]
    assert CycNum.from_json(5, a.to_json()) == a


def test_mul_rho_power_matches_multiplication(rng):
    a = random_cyc(7, rng)
    for k in range(-3, 9):
        assert a.mul_rho_power(k) == a * CycNum.rho(7, k)


def test_functional_add_sub_neg(rng):
    p = 5
    a, b = random_cyc(p, rng), random_cyc(p, rng)
    assert cyc_add(a, b) == a + b
    assert cyc_sub(a, b) == a - b
    assert cyc_add(cyc_neg(a), a).is_zero()
    assert cyc_sub(a, a) == 0


def test_rational_constants_hash_like_ints():
    p = 5
    assert CycNum.from_rational(p, 3) == 3
    assert hash(CycNum.from_rational(p, 3)) == hash(3)
    assert hash(CycNum.from_rational(p, Fraction(1, 2))) == hash(Fraction(1, 2))
    assert CycNum.from_rational(p, 3) in {3}
    assert {CycNum.from_rational(p, 2): "two"}[2] == "two"
    assert len({CycNum.rho(p), CycNum.rho(p, 1)}) == 1


def test_float_coordinates_are_rejected():
    with pytest.raises(TypeError):
        CycNum(3, [0.5, 1])
    with pytest.raises(TypeError):
        CycNum.from_rational(3, 0.5)
    assert CycNum(3, [Fraction(1, 2), 1]).coeffs == (Fraction(1, 2), Fraction(1))


def test_random_cyc_stays_in_bound(rng):
    for _ in range(20):
        value = random_cyc(7, rng, 2)
        assert all(c.denominator == 1 and -2 <= c <= 2 for c in value.coeffs)
