''' 
Date: 2026-09-22 11:58:16
LastEditTime: 2026-10-17 10:21:37
Description: 
    JSON forms of library values. Exact numbers are written as strings, never as floats.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import json
from fractions import Fraction

from dq.algebra.poly_algebra import Polynomial
from dq.algebra.scalar_series import GaussianRational, HbarSeries
from dq.complexes.multidiff import MultiDiffOp
from dq.complexes.polyvector import CovectorField, PolyVector
from dq.parser.printer import to_text


def scalar_json(c):
    """ {"re": "p/q", "im": "p/q"} for a Gaussian rational, "p/q" for a plain rational. """
    if isinstance(c, GaussianRational):
        return {'re': str(c.re), 'im': str(c.im)}
    return str(Fraction(c))


def polynomial_json(f):
    return [{'coeff': scalar_json(c), 'exponents': list(e)} for e, c in f.terms]


def operator_terms_json(D, exact=False):
    """ Term list of an operator with 1-based derivative indices per slot. """
    return [
        {'coeff': polynomial_json(c) if exact else str(c), 'slots': [[i + 1 for i in mu] for mu in slots]}
        for slots, c in D.terms
    ]


def series_json(series, exact=False):
    return {'order': series.order, 'coeffs': [to_json(c, exact) for c in series]}


def to_json(value, exact=False):
    """
        JSON form of a payload. Math values become their text form; with `exact` polynomials and
        operators become term lists whose coefficients are written part by part.
    """
    if isinstance(value, HbarSeries):
        return series_json(value, exact)
    if isinstance(value, (GaussianRational, Fraction)):
        return scalar_json(value)
    if exact and isinstance(value, Polynomial):
        return polynomial_json(value)
    if exact and isinstance(value, MultiDiffOp):
        return operator_terms_json(value, exact)
    if isinstance(value, (Polynomial, PolyVector, CovectorField, MultiDiffOp)):
        return to_text(value)
    if isinstance(value, dict):
        return {str(k): to_json(v, exact) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v, exact) for v in value]
    return value


def dumps(payload):
    """ Byte-stable JSON text: sorted keys, default separators. """
    return json.dumps(to_json(payload), sort_keys=True)
