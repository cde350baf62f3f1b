''' 
Date: 2026-09-19 09:31:07
LastEditTime: 2026-10-14 21:50:44
Description: 
    Seeding and random samplers of library values, used by linfty-check and the test suite.
    All samplers draw from a numpy Generator, so a seed fixes every value exactly.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import os
import random
from fractions import Fraction

import numpy as np

from dq.algebra.poly_algebra import Polynomial
from dq.algebra.scalar_series import HbarSeries
from dq.complexes.multidiff import MultiDiffOp, identity
from dq.complexes.polyvector import PolyVector


def set_seed(seed=1029):
    random.seed(seed)
    os.environ['PYTHONHASHSEED'] = str(seed)
    np.random.seed(seed)
    return np.random.default_rng(seed)


def random_rational(rng, max_num=3, max_den=2, nonzero=True):
    while True:
        value = Fraction(int(rng.integers(-max_num, max_num + 1)), int(rng.integers(1, max_den + 1)))
        if value or not nonzero:
            return value


def random_exponents(rng, dim, max_degree):
    total = int(rng.integers(0, max_degree + 1))
    exps = [0] * dim
    for _ in range(total):
        exps[int(rng.integers(0, dim))] += 1
    return tuple(exps)


def random_monomial(rng, dim, max_degree=3):
    return Polynomial.monomial(dim, random_exponents(rng, dim, max_degree))


def random_polynomial(rng, dim, max_degree=2, n_terms=3):
    terms = {}
    for _ in range(n_terms):
        terms[random_exponents(rng, dim, max_degree)] = random_rational(rng)
    return Polynomial(dim, terms)


def random_multivector(rng, dim, degree, coeff_degree=2, n_terms=2):
    if degree > dim:
        return PolyVector.zero(dim, degree)
    pairs = []
    for _ in range(n_terms):
        indices = tuple(sorted(int(i) for i in rng.choice(dim, size=degree, replace=False)))
        pairs.append((indices, random_polynomial(rng, dim, coeff_degree, n_terms=2)))
    return PolyVector.from_terms(dim, degree, pairs)


def random_vector_field(rng, dim, coeff_degree=2, n_terms=2):
    return random_multivector(rng, dim, 1, coeff_degree, n_terms)


def random_bivector(rng, dim, coeff_degree=2, n_terms=2):
    return random_multivector(rng, dim, 2, coeff_degree, n_terms)


def random_antisymmetric(rng, dim):
    """ Constant bivector with random rational entries alpha^{ij}, i < j. """
    components = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            components[(i, j)] = random_rational(rng, nonzero=False)
    return PolyVector(dim, 2, components)


def random_multi_index(rng, dim, max_order, min_order=0):
    order = int(rng.integers(min_order, max_order + 1))
    return tuple(sorted(int(i) for i in rng.integers(0, dim, size=order)))


def random_operator(rng, dim, arity, coeff_degree=2, max_order=2, n_terms=2, normalized=False):
    pairs = []
    for _ in range(n_terms):
        slots = tuple(random_multi_index(rng, dim, max_order, 1 if normalized else 0) for _ in range(arity))
        pairs.append((slots, random_polynomial(rng, dim, coeff_degree, n_terms=2)))
    return MultiDiffOp.from_terms(dim, arity, pairs)


def random_equivalence_terms(rng, dim, order, coeff_degree=1, max_order=2):
    """ Series id + hbar T_1 + ... + hbar^order T_order with every T_k normalized. """
    coeffs = [identity(dim)]
    for _ in range(order):
        coeffs.append(random_operator(rng, dim, 1, coeff_degree, max_order, n_terms=2, normalized=True))
    return HbarSeries(coeffs)
