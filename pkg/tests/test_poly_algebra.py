from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from dq.algebra.poly_algebra import Polynomial, evaluate, partial_derive, poly_ring_ops
from dq.algebra.scalar_series import GaussianRational
from dq.util.errors import UsageError
from dq.util.random_util import random_polynomial

from conftest import gaussian_rationals, poly, polynomials


SYMBOLS = sympy.symbols('x1:4')


def to_sympy(f):
    expr = sympy.Integer(0)
    for exps, c in f.terms:
        coeff = sympy.Rational(c.re.numerator, c.re.denominator) \
            + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)
        expr += coeff * sympy.Mul(*[s ** e for s, e in zip(SYMBOLS, exps)])
    return sympy.expand(expr)


def test_ring_ops_examples():
    x1, x2 = poly('x1', 2), poly('x2', 2)
    assert poly_ring_ops(x1, x2)['mul'] == poly('x1*x2', 2)
    assert (x1 + x2) ** 2 == poly('x1**2 + 2*x1*x2 + x2**2', 2)
    assert x1 * Polynomial.one(2) == x1
    assert poly_ring_ops(x1, x2)['sub'] == poly('x1 - x2', 2)


def test_dimension_mismatch():
    with pytest.raises(UsageError):
        poly_ring_ops(poly('x1', 2), poly('x1', 3))


def test_partial_derive_examples():
    assert partial_derive(poly('x1**2'), 0) == poly('2*x1')
    assert partial_derive(poly('x1'), 1) == 0
    assert partial_derive(poly('x1*x2 + x1**3'), 0) == poly('x2 + 3*x1**2')
    with pytest.raises(UsageError):
        partial_derive(poly('x1', 2), 2)


def test_evaluate_examples():
    assert evaluate(poly('x1*x2', 2), [2, 3]) == 6
    assert evaluate(poly('5', 2), [7, -1]) == 5
    assert evaluate(poly('x1**2 - x2', 2), [Fraction(1, 2), Fraction(1, 4)]) == 0
    with pytest.raises(UsageError):
        evaluate(poly('x1', 2), [1])


def test_canonical_text():
    f = poly('x2 + 3*x1**2 - 1/2 + i*x1*x3')
    assert str(f) == '3*x1**2 + i*x1*x3 + x2 - 1/2'
    assert str(Polynomial.zero(3)) == '0'


def test_product_matches_sympy(rng):
    for _ in range(25):
        f = random_polynomial(rng, 3, max_degree=3, n_terms=4)
        g = random_polynomial(rng, 3, max_degree=3, n_terms=4)
        assert to_sympy(f * g) == sympy.expand(to_sympy(f) * to_sympy(g))
        assert to_sympy(f.derive(1)) == sympy.diff(to_sympy(f), SYMBOLS[1])


@given(polynomials(), polynomials())
def test_leibniz(f, g):
    for i in range(2):
        assert (f * g).derive(i) == f.derive(i) * g + f * g.derive(i)


@given(polynomials())
def test_partials_commute(f):
    assert f.derive(0).derive(1) == f.derive(1).derive(0)


@given(polynomials(), polynomials(), gaussian_rationals(), gaussian_rationals())
def test_evaluate_is_a_ring_homomorphism(f, g, a, b):
    point = [a, b]
    assert evaluate(f * g, point) == evaluate(f, point) * evaluate(g, point)
    assert evaluate(f + g, point) == evaluate(f, point) + evaluate(g, point)


def test_no_stored_zero_coefficients():
    f = Polynomial(2, {(1, 0): 1, (0, 1): 0})
    assert f.terms == [((1, 0), GaussianRational(1))]
    assert not (f - f)
