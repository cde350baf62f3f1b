from fractions import Fraction
import math

import pytest

from dq.algebra.scalar_series import HbarSeries
from dq.complexes.multidiff import GerstenhaberDGLA, MultiDiffOp
from dq.complexes.polyvector import PolyVector, SchoutenDGLA
from dq.quantization.gauge import (
    bch,
    formal_bivector,
    formal_poisson_bracket,
    formal_vector_field,
    gauge_act_dgla,
    gauge_apply_bivector,
    mc_residual_poisson,
    operator_exp,
    operator_log,
)
from dq.quantization.star import EquivalenceOp, equivalence_apply, moyal_star, symplectic_alpha
from dq.util.errors import DegreeError, UsageError
from dq.util.random_util import random_antisymmetric, random_equivalence_terms, random_vector_field

from conftest import mv, op, series


def random_formal_field(rng, dim, order):
    return formal_vector_field([random_vector_field(rng, dim, coeff_degree=1) for _ in range(order + 1)])


def test_formal_constructors():
    P = formal_bivector([mv('d1^d2'), PolyVector.zero(3, 0)])
    assert P[1] == PolyVector.zero(3, 2)
    with pytest.raises(DegreeError):
        formal_vector_field([mv('d1'), mv('d1^d2')])
    with pytest.raises(UsageError):
        formal_bivector([])


def test_formal_poisson_bracket():
    P = formal_bivector([mv('d1^d2', 2), PolyVector.zero(2, 2)])
    F = series('0: x1', order=1, dim=2)
    G = series('0: x2; 1: x2', order=1, dim=2)
    assert formal_poisson_bracket(P, F, G) == series('0: 1; 1: 1', order=1, dim=2)


def test_mc_residual_poisson():
    P = formal_bivector([mv('d1^d2 + x2*d2^d3')])
    assert mc_residual_poisson(P) == series('d1^d2^d3', 'multivector', order=0, degree=3)
    P = formal_bivector([mv('d1^d2'), mv('x2*d2^d3')])
    assert mc_residual_poisson(P) == series('1: d1^d2^d3', 'multivector', order=1, degree=3)
    assert mc_residual_poisson(formal_bivector([mv('x3*d1^d2'), mv('d2^d3')])).is_zero()


def test_bch_commuting_fields():
    X = formal_vector_field([mv('d1'), mv('2*d1')])
    Y = formal_vector_field([mv('d2'), PolyVector.zero(3, 1)])
    assert bch(X, Y) == X + Y


def test_bch_first_correction():
    X = formal_vector_field([mv('x2*d1', 2), PolyVector.zero(2, 1)])
    Y = formal_vector_field([mv('d2', 2), PolyVector.zero(2, 1)])
    Z = bch(X, Y)
    assert Z[0] == mv('x2*d1 + d2', 2)
    assert Z[1] == mv('-1/2*d1', 2)


def test_bch_truncation():
    X = formal_vector_field([mv('x2*d1', 2), mv('d2', 2), mv('x1*d1', 2)])
    Y = formal_vector_field([mv('d2', 2), PolyVector.zero(2, 1), mv('d1', 2)])
    assert bch(X, Y, order=1) == bch(X.truncate(1), Y.truncate(1))
    with pytest.raises(UsageError):
        bch(X.truncate(1), Y)


def test_bch_is_associative(rng):
    for _ in range(5):
        X, Y, W = (random_formal_field(rng, 2, 2) for _ in range(3))
        assert bch(X, bch(Y, W)) == bch(bch(X, Y), W)


def test_gauge_closed_form():
    order = 5
    X = formal_vector_field([mv('x1*d1', 2)] + [PolyVector.zero(2, 1)] * order)
    P = formal_bivector([PolyVector.zero(2, 2), mv('d1^d2', 2)] + [PolyVector.zero(2, 2)] * (order - 1))
    result = gauge_apply_bivector(X, P)
    expected = [PolyVector.zero(2, 2)] + [
        mv('d1^d2', 2) * Fraction((-1) ** k, math.factorial(k)) for k in range(order)
    ]
    assert result == HbarSeries(expected)


def test_gauge_matches_generic_action(rng):
    for _ in range(5):
        X = random_formal_field(rng, 3, 3)
        P = formal_bivector([random_antisymmetric(rng, 3)] + [PolyVector.zero(3, 2)] * 3)
        assert gauge_act_dgla(X.shift(1), P, SchoutenDGLA(3)) == gauge_apply_bivector(X, P)


def test_trivial_gauge_element():
    P = formal_bivector([mv('d1^d2'), mv('x1*d2^d3')])
    g = formal_vector_field([PolyVector.zero(3, 1)] * 2)
    assert gauge_act_dgla(g, P, SchoutenDGLA(3)) == P
    with pytest.raises(UsageError):
        gauge_act_dgla(formal_vector_field([mv('d1'), mv('d2')]), P, SchoutenDGLA(3))


def test_gauge_inverse(rng):
    dgla = SchoutenDGLA(2)
    g = random_formal_field(rng, 2, 3).shift(1)
    P = formal_bivector([mv('d1^d2', 2), mv('x1*d1^d2', 2), PolyVector.zero(2, 2), mv('x2**2*d1^d2', 2)])
    assert gauge_act_dgla(-g, gauge_act_dgla(g, P, dgla), dgla) == P


def test_gauge_preserves_maurer_cartan(rng):
    for _ in range(10):
        X = random_formal_field(rng, 3, 3)
        P = formal_bivector([random_antisymmetric(rng, 3)] + [PolyVector.zero(3, 2)] * 3)
        assert mc_residual_poisson(P).is_zero()
        assert mc_residual_poisson(gauge_apply_bivector(X, P)).is_zero()


def test_gerstenhaber_gauge_is_conjugation():
    S = moyal_star(symplectic_alpha(1), 2)
    T = EquivalenceOp(series('0: [  ]; 1: [ d1 d1 ]', 'operator', dim=2, degree=1))
    moved = gauge_act_dgla(operator_log(T), S.deformation(), GerstenhaberDGLA(2))
    assert moved == equivalence_apply(T, S).deformation()
    assert moved[1] == S[1] + op('2 [ d1 | d1 ]', 2)


def test_gerstenhaber_gauge_on_random_equivalences(rng):
    for _ in range(3):
        S = moyal_star(random_antisymmetric(rng, 2), 2)
        T = EquivalenceOp(random_equivalence_terms(rng, 2, 2))
        moved = gauge_act_dgla(operator_log(T), S.deformation(), GerstenhaberDGLA(2))
        assert moved == equivalence_apply(T, S).deformation()


def test_operator_exp_inverts_log(rng):
    for _ in range(5):
        T = EquivalenceOp(random_equivalence_terms(rng, 2, 3))
        g = operator_log(T)
        assert g[0] == MultiDiffOp.zero(2, 1)
        assert operator_exp(g) == T.terms
