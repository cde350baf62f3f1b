''' 
Date: 2026-09-25 10:02:44
LastEditTime: 2026-10-16 11:30:18
Description: 
    Shared fixtures, parsing shortcuts and hypothesis strategies for the dq test suite.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from dq.algebra.poly_algebra import Polynomial
from dq.algebra.scalar_series import GaussianRational, HbarSeries
from dq.parser.expression import parse_series, parse_value


settings.register_profile('dq', max_examples=60, deadline=None)
settings.load_profile('dq')


def poly(text, dim=3):
    return parse_value(text, 'polynomial', dim)


def mv(text, dim=3):
    return parse_value(text, 'multivector', dim)


def op(text, dim=3):
    return parse_value(text, 'operator', dim)


def cov(text, dim=3):
    return parse_value(text, 'covector', dim)


def series(text, element='polynomial', order=2, dim=3, degree=None):
    return parse_series(text, element, order, dim, degree)


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@st.composite
def gaussian_rationals(draw):
    return GaussianRational(draw(small_fractions), draw(small_fractions))


@st.composite
def scalar_series(draw, order):
    return HbarSeries([draw(gaussian_rationals()) for _ in range(order + 1)])


@st.composite
def polynomials(draw, dim=2, max_degree=4, max_terms=4):
    exps = st.tuples(*[st.integers(0, max_degree) for _ in range(dim)]).filter(lambda e: sum(e) <= max_degree)
    terms = draw(st.dictionaries(exps, gaussian_rationals(), max_size=max_terms))
    return Polynomial(dim, terms)
