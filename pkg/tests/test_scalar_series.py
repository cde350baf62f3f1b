from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dq.algebra.scalar_series import (
    I,
    ONE,
    GaussianRational,
    HbarSeries,
    series_add,
    series_invert,
    series_mul,
    series_sub,
)
from dq.util.errors import NonInvertibleSeriesError, UsageError

from conftest import gaussian_rationals, scalar_series


def S(*coeffs):
    return HbarSeries([GaussianRational(c) for c in coeffs])


def test_gaussian_rational_is_exact():
    z = GaussianRational(Fraction(1, 3), 2)
    assert z * z.conjugate() == Fraction(37, 9)
    assert (ONE / 3) * 3 == 1
    assert I * I == -1
    assert GaussianRational(Fraction(2, 4)).re == Fraction(1, 2)


@pytest.mark.parametrize('value, text', [
    (GaussianRational(Fraction(1, 2)), '1/2'),
    (I, 'i'),
    (-I, '-i'),
    (GaussianRational(0, Fraction(1, 2)), '1/2*i'),
    (GaussianRational(1, Fraction(-1, 2)), '(1 - 1/2*i)'),
    (GaussianRational(-3, 1), '(-3 + i)'),
])
def test_gaussian_rational_text(value, text):
    assert str(value) == text


def test_division_by_zero_scalar():
    with pytest.raises(ZeroDivisionError):
        ONE / GaussianRational(0)


def test_series_add_and_sub():
    assert series_add(S(1, 1), S(2, -1)) == S(3, 0)
    assert series_add(S(1, 2, 3), S(0, 0, 0)) == S(1, 2, 3)
    assert series_sub(S(1, 2, 3), S(1, 2, 0)) == S(0, 0, 3)


def test_series_mul():
    assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)
    assert series_mul(S(4, 5, 6), S(1, 0, 0)) == S(4, 5, 6)
    assert series_mul(S(0, 1), S(0, 1)) == S(0, 0)


def test_order_mismatch_needs_explicit_retruncation():
    with pytest.raises(UsageError):
        series_add(S(1, 1), S(1, 1, 1))
    assert series_add(S(1, 1), S(1, 1, 1), retruncate=True) == S(2, 2)
    with pytest.raises(UsageError):
        S(1, 2).truncate(3)


def test_series_invert():
    assert series_invert(S(1, 1, 0, 0)) == S(1, -1, 1, -1)
    assert series_invert(S(1)) == S(1)
    assert series_invert(S(2, 0)) == S(Fraction(1, 2), 0)
    with pytest.raises(NonInvertibleSeriesError):
        series_invert(S(0, 1))


def test_non_invertible_is_a_zero_division():
    with pytest.raises(ZeroDivisionError):
        series_invert(S(0, 1, 1))


def test_shift_and_unshift():
    assert S(1, 2, 3).shift(1) == S(0, 1, 2)
    assert S(0, 2, 3).unshift(1) == S(2, 3)
    with pytest.raises(UsageError):
        S(1, 2, 3).unshift(1)


@given(st.integers(0, 6).flatmap(lambda n: st.tuples(scalar_series(n), scalar_series(n), scalar_series(n))))
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (b - a) == b


@given(st.integers(0, 6).flatmap(scalar_series), gaussian_rationals())
def test_inverse_is_two_sided(a, a0):
    a = a.with_coeff(0, a0 if a0 else ONE)
    one = HbarSeries.constant(ONE, a.order)
    assert a * series_invert(a) == one
    assert series_invert(a) * a == one
