from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qdfcheck.errors import FieldError
from qdfcheck.fields import GF, QQ, field_from_label, gaussian_rationals

P = 10007


def test_prime_field_basic_arithmetic():
    K = GF(7)
    assert K.add(K.from_int(5), K.from_int(4)) == K.from_int(2)
    assert K.mul(K.from_int(3), K.from_int(5)) == K.from_int(1)
    assert K.inv(K.from_int(3)) == K.from_int(5)


def test_non_prime_modulus_rejected():
    with pytest.raises(FieldError):
        field_from_label("fp:12")


def test_labels_round_trip():
    assert field_from_label("qq") == QQ
    assert field_from_label("fp:10009").label == "fp:10009"
    assert field_from_label("qq-i").label == "qq-i"
    with pytest.raises(FieldError):
        field_from_label("reals")


@given(st.integers(1, P - 1))
def test_prime_field_inverse(a):
    K = GF(P)
    x = K.from_int(a)
    assert K.mul(x, K.inv(x)) == K.one


@given(st.fractions(), st.fractions())
def test_rationals_match_fraction(a, b):
    assert QQ.add(a, b) == Fraction(a) + Fraction(b)
    assert QQ.mul(a, b) == Fraction(a) * Fraction(b)


def test_square_root_of_minus_one():
    # 10009 = 1 mod 4 has one, 10007 = 3 mod 4 does not
    K = GF(10009)
    i = K.sqrt_minus_one()
    assert K.mul(i, i) == K.neg(K.one)
    assert GF(10007).sqrt_minus_one() is None


def test_gaussian_rationals():
    K = gaussian_rationals()
    i = K.sqrt_minus_one()
    assert K.mul(i, i) == K.neg(K.one)
    z = K.add(K.one, i)
    assert K.mul(z, K.inv(z)) == K.one
