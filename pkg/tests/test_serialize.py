import json
from fractions import Fraction

from dq.algebra.scalar_series import GaussianRational, HbarSeries
from dq.util.serialize import dumps, operator_terms_json, scalar_json, series_json, to_json

from conftest import mv, op, poly


def test_scalar_forms():
    assert scalar_json(GaussianRational(Fraction(1, 2), -3)) == {'re': '1/2', 'im': '-3'}
    assert scalar_json(Fraction(-2, 6)) == '-1/3'
    assert scalar_json(4) == '4'


def test_series_form():
    s = HbarSeries([GaussianRational(1), GaussianRational(0), GaussianRational(0, Fraction(1, 2))])
    assert series_json(s) == {'order': 2, 'coeffs': [
        {'re': '1', 'im': '0'}, {'re': '0', 'im': '0'}, {'re': '0', 'im': '1/2'},
    ]}


def test_exact_values():
    f = poly('3*x1*x2 - 1', 2)
    assert to_json(f) == '3*x1*x2 - 1'
    assert to_json(f, exact=True) == [
        {'coeff': {'re': '3', 'im': '0'}, 'exponents': [1, 1]},
        {'coeff': {'re': '-1', 'im': '0'}, 'exponents': [0, 0]},
    ]
    D = op('x1 [ d1 | d2 d2 ]', 2)
    assert operator_terms_json(D, exact=True) == [
        {'coeff': [{'coeff': {'re': '1', 'im': '0'}, 'exponents': [1, 0]}], 'slots': [[1], [2, 2]]},
    ]
    assert to_json(D, exact=True) == operator_terms_json(D, exact=True)
    assert to_json(mv('d1^d2'), exact=True) == 'd1^d2'


def test_dumps_is_sorted():
    text = dumps({'b': Fraction(1, 2), 'a': [poly('x1', 1)]})
    assert text == '{"a": ["x1"], "b": "1/2"}'
    assert json.loads(text) == {'a': ['x1'], 'b': '1/2'}
