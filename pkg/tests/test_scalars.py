from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperstem.scalars import (HALF, I, ONE, SQRT2, ZERO, KScalar, k_conj, k_inv,
                               k_mul, zeta8_power)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(KScalar, rationals, rationals, rationals, rationals)
nonzero = scalars.filter(lambda x: not x.is_zero())

S2 = SQRT2 * HALF


def test_products():
    assert k_mul(S2, S2) == KScalar(Fraction(1, 2))
    assert k_mul(I, I) == -ONE
    assert k_mul(KScalar(1, 0, 0, 1), KScalar(1, 0, 0, -1)) == 3


def test_conjugation():
    assert k_conj(I) == -I
    assert k_conj(KScalar(Fraction(3, 2))) == Fraction(3, 2)
    assert k_conj((ONE + I) * (ONE + I)) == KScalar(0, -2)
    assert k_conj(SQRT2) == SQRT2


def test_inverses():
    assert k_inv(ONE + I) == KScalar(Fraction(1, 2), Fraction(-1, 2))
    assert k_inv(SQRT2) == S2
    assert k_inv(ONE + SQRT2) == SQRT2 - ONE
    with pytest.raises(ZeroDivisionError):
        k_inv(ZERO)


def test_eighth_roots_of_unity():
    assert zeta8_power(0) == ONE
    assert zeta8_power(2) == I
    assert zeta8_power(4) == -ONE
    assert zeta8_power(1) == S2 + I * S2
    assert zeta8_power(-1) == zeta8_power(7) == zeta8_power(1).conj()
    for m in range(8):
        assert zeta8_power(m) * zeta8_power(-m) == ONE
        assert zeta8_power(m) ** 8 == ONE


def test_floats_rejected():
    with pytest.raises(TypeError):
        KScalar.coerce(1.5)
    with pytest.raises(TypeError):
        KScalar.coerce(1j)


def test_str_and_json():
    x = KScalar(Fraction(-1, 2), 1, 0, 3)
    assert str(x) == "-1/2+i+3*i*sqrt2"
    assert str(ZERO) == "0"
    assert KScalar.from_json(x.to_json()) == x


@settings(max_examples=1000)
@given(scalars, scalars, scalars)
def test_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == ZERO


@settings(max_examples=500)
@given(nonzero)
def test_inverse_law(x):
    assert x * x.inv() == ONE
    assert x.norm() > 0


@settings(max_examples=500)
@given(scalars, scalars)
def test_galois_automorphisms(x, y):
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).sqrt2_conj() == x.sqrt2_conj() + y.sqrt2_conj()
    assert (x * y).sqrt2_conj() == x.sqrt2_conj() * y.sqrt2_conj()
    assert x.conj().conj() == x


@given(scalars)
def test_hash_matches_equality(x):
    y = KScalar(*x.parts())
    assert x == y and hash(x) == hash(y)
    if x.is_rational():
        assert x == x.a and hash(x) == hash(x.a)
