from fractions import Fraction

import pytest

from dq.algebra.poly_algebra import Polynomial
from dq.algebra.scalar_series import I, GaussianRational, HbarSeries
from dq.complexes.multidiff import MultiDiffOp
from dq.complexes.polyvector import CovectorField, PolyVector
from dq.parser.expression import max_index, parse, parse_series, parse_value
from dq.parser.printer import series_text, to_text
from dq.util.errors import ParseError

from conftest import mv, op, poly


ROUND_TRIP = [
    ('polynomial', 'x1'),
    ('polynomial', '0'),
    ('polynomial', '-7/3'),
    ('polynomial', 'i'),
    ('polynomial', '3*x1**2 + i*x1*x3 + x2 - 1/2'),
    ('polynomial', '(x1 + x2)**3'),
    ('polynomial', '(1 + i)*x1 - (2 - i)*x2**2'),
    ('polynomial', '-x1*x2*x3 + 1/5*x3**4'),
    ('polynomial', '(x1 - 1)*(x1 + 1)'),
    ('polynomial', 'x2**0 + x3**1'),
    ('polynomial', '-(x1 - i*x2)**2'),
    ('polynomial', '1/2*i*x1 - 3/4*i'),
    ('multivector', 'd1'),
    ('multivector', 'd1^d2 + x2*d2^d3'),
    ('multivector', 'd2^d1'),
    ('multivector', '(x1 + 1)*d3'),
    ('multivector', 'x1*d1 - x2*d2 + 1/3*x3*d3'),
    ('multivector', 'd1^d2^d3'),
    ('multivector', 'x3**2*d3^d1 - i*d2^d3'),
    ('multivector', '(1 - i)*x1*d1^d2'),
    ('multivector', 'x1**2 + x2'),
    ('multivector', '(x1*d1)^(x2*d2)'),
    ('multivector', '-1/2*d1 + d1'),
    ('multivector', '(x1 - x2)*d1^d3 + x1*d2'),
    ('covector', 'dx1'),
    ('covector', 'dx1 + x3*dx2'),
    ('covector', '-x1**2*dx3 + (x1 + x2)*dx1'),
    ('covector', '1/2*i*dx2'),
    ('covector', '0'),
    ('operator', '[  ]'),
    ('operator', 'x1 [ d1 | d2 d2 ]'),
    ('operator', '1/2*i [ d1 | d2 ] - 1/2*i [ d2 | d1 ]'),
    ('operator', '[ d1 d1 | d2 d2 ] - 2 [ d1 d2 | d1 d2 ]'),
    ('operator', 'x1 [ d1 | d2 d2 ] - [  | d1 ] + (x2 + 1) [ d3 | d3 ]'),
    ('operator', '[  |  ]'),
    ('operator', 'x2**2 + 1'),
    ('operator', '(x1 - i) [ d3 d3 d3 ]'),
    ('operator', '[ d1 | d2 | d3 ] + [ d2 | d3 | d1 ]'),
    ('operator', '-1/8 [ d1 d1 | d2 d2 ]'),
    ('operator', 'x1*x2 [ d1 ] + x3 [ d2 ] - [ d3 ]'),
]


@pytest.mark.parametrize('kind, text', ROUND_TRIP)
def test_round_trip(kind, text):
    value = parse_value(text, kind, 3)
    assert parse_value(str(value), kind, 3) == value


def test_value_kinds():
    assert poly('x1**2') == Polynomial.monomial(3, (2, 0, 0))
    assert poly('i') == Polynomial.constant(3, I)
    assert poly('3/6') == Polynomial.constant(3, Fraction(1, 2))
    assert poly('2 - 3*i') == Polynomial.constant(3, GaussianRational(2, -3))
    assert mv('d2^d1') == -mv('d1^d2')
    assert mv('d1^d1') == PolyVector.zero(3, 2)
    assert mv('x1*d1^d2') == mv('d1^d2') * poly('x1')
    assert parse_value('dx1 + x3*dx2', 'covector', 3) == CovectorField(3, [poly('1'), poly('x3'), poly('0')])
    assert op('[ d2 d1 | ]') == MultiDiffOp(3, 2, {((0, 1), ()): 1})
    assert op('x1') == MultiDiffOp.function(poly('x1'))


def test_printing():
    assert str(poly('x2 - 1/2 + i*x1*x3 + 3*x1**2')) == '3*x1**2 + i*x1*x3 + x2 - 1/2'
    assert str(mv('x2*d2^d3 + d1^d2')) == 'd1^d2 + x2*d2^d3'
    assert str(mv('d3 + x1*d3')) == '(x1 + 1)*d3'
    assert str(op('[  ]')) == '[  ]'
    assert str(op('2 [ d1 |  ]')) == '2 [ d1 |  ]'
    assert str(parse_value('x3*dx2 + dx1', 'covector', 3)) == 'dx1 + x3*dx2'
    assert str(poly('(1 + i)*x1')) == '(1 + i)*x1'


def test_dimension_inference():
    assert max_index('x1 + d4^dx2') == 4
    assert max_index('i + 2') == 0
    assert parse_value('x2', 'polynomial').dim == 2
    assert parse_value('x2', 'polynomial', 5).dim == 5


def test_implicit_product_only_before_slots():
    with pytest.raises(ParseError) as info:
        parse_value('2 x1', 'polynomial', 3)
    assert info.value.pos == 2


@pytest.mark.parametrize('text, kind, pos, fragment', [
    ('x1 + * x2', 'polynomial', 5, "unexpected token '*'"),
    ('x1 + y', 'polynomial', 5, "unknown name 'y'"),
    ('x4', 'polynomial', 0, 'exceeds the dimension'),
    ('d1*d2', 'multivector', 2, "with '^'"),
    ('x1 $', 'polynomial', 3, 'unrecognized character'),
    ('(x1 + x2', 'polynomial', 8, "expected ')'"),
    ('x1 / x2', 'polynomial', 3, 'nonzero constants'),
    ('1/0', 'polynomial', 1, 'division by zero'),
    ('d1', 'polynomial', 0, 'expected a polynomial'),
    ('x1**', 'polynomial', 4, 'integer exponent'),
    ('', 'polynomial', 0, 'expression expected'),
    ('[ d1 x1 ]', 'operator', 5, "'|' or ']'"),
    ('[ d1 ] + [ d1 | d2 ]', 'operator', 7, 'arity'),
    ('dx1 ^ dx2', 'multivector', 4, "'^' needs multivectors"),
    ('d1 + dx1', 'multivector', 3, 'cannot combine'),
])
def test_error_positions(text, kind, pos, fragment):
    with pytest.raises(ParseError) as info:
        parse_value(text, kind, 3)
    assert info.value.pos == pos
    assert fragment in info.value.msg
    assert info.value.exit_code == 1


def test_error_rendering():
    with pytest.raises(ParseError) as info:
        parse_value('x1 + * x2', 'polynomial', 3)
    assert str(info.value) == "unexpected token '*' at column 6:\nx1 + * x2\n     ^"


def test_series_parsing():
    s = parse_series('0: x1; 2: 1/2*i', 'polynomial', 3, 2)
    assert s == HbarSeries([poly('x1', 2), poly('0', 2), poly('1/2*i', 2), poly('0', 2)])
    assert parse_series('x1', 'polynomial', 1, 2) == HbarSeries([poly('x1', 2), poly('0', 2)])
    assert parse_series('0', 'polynomial', 2, 2).is_zero()
    P = parse_series('1: d1^d2', 'multivector', 1, degree=2)
    assert P.order == 1 and P[1].dim == 2
    assert P[0] == PolyVector.zero(2, 2)
    T = parse_series('0: [  ]; 1: [ d1 d1 ]', 'operator', 1, 1, degree=1)
    assert T[1] == MultiDiffOp(1, 1, {((0, 0),): 1})


def test_series_text():
    s = parse_series('1: x1*x2; 0: 3', 'polynomial', 2, 2)
    assert series_text(s) == '0: 3; 1: x1*x2'
    assert to_text(s) == series_text(s)
    assert series_text(HbarSeries.zeros(Polynomial.zero(2), 3)) == '0'
    assert parse_series(series_text(s), 'polynomial', 2, 2) == s
    assert to_text(poly('x1')) == 'x1'


@pytest.mark.parametrize('text, fragment', [
    ('0: x1; 3: x2', 'exceeds the truncation order'),
    ('0: x1; 0: x2', 'duplicate entry'),
    ('0: x1;; 1: x2', 'empty series entry'),
    ('0: x1; 1: x2 +', 'unexpected end of input'),
])
def test_series_errors(text, fragment):
    with pytest.raises(ParseError) as info:
        parse_series(text, 'polynomial', 2, 3)
    assert fragment in info.value.msg
    assert 0 <= info.value.pos <= len(text)
    assert info.value.text == text


def test_series_error_column_is_absolute():
    text = '0: x1; 1: x2 + y'
    with pytest.raises(ParseError) as info:
        parse_series(text, 'polynomial', 2, 3)
    assert info.value.pos == text.index('y')


def test_parse_dispatch():
    assert parse('x1', 'polynomial', 2) == poly('x1', 2)
    assert parse('1: x1', 'series', 2, order=1) == HbarSeries([poly('0', 2), poly('x1', 2)])
    with pytest.raises(ParseError):
        parse('x1', 'series', 2)
    with pytest.raises(ParseError):
        parse('x1', 'tensor', 2)
