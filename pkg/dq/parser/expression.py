''' 
Date: 2026-09-20 18:37:55
LastEditTime: 2026-10-16 10:03:27
Description: 
    Tokenizer, recursive-descent parser and typed evaluation of the dq math grammar:
        polynomials      x1**2 - 1/2*x2, i*x1
        multivectors     d1^d2 + x2*d2^d3
        covectors        dx1 + x3*dx2
        operators        x1 [ d1 | d2 d2 ]
        series           0: x1*d1; 1: d2

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import List

from dq.algebra.poly_algebra import Polynomial
from dq.algebra.scalar_series import I, GaussianRational, HbarSeries, is_scalar
from dq.complexes.multidiff import MultiDiffOp
from dq.complexes.polyvector import CovectorField, PolyVector, wedge
from dq.util.errors import DQError, ParseError


TOKENS = re.compile(
    "|".join([
        r"(?P<ws>\s+)",
        r"(?P<ident>[A-Za-z_][A-Za-z0-9_]*)",
        r"(?P<number>[0-9]+)",
        r"(?P<oper>\*\*|\*|/|\+|\-|\^|\(|\)|\[|\]|\|)",
    ])
)

IDENT = re.compile(r"^(x|d|dx)([1-9][0-9]*)$")


class TokenType(Enum):
    END = 0
    IDENT = 1
    NUMBER = 2
    OPER = 3


class TokenStream:
    """ Consumable stream of tokens; `offset` shifts reported columns for text embedded in a larger input. """

    def __init__(self, text, source=None, offset=0):
        self.text = text
        self.source = source if source is not None else text
        self.offset = offset
        self.pos = 0
        self.token_pos = 0
        self.token = (None, None)
        self.next()

    def next(self):
        while self.pos < len(self.text):
            self.token_pos = self.pos
            m = TOKENS.match(self.text, self.pos)
            if not m:
                raise self.error('unrecognized character')
            self.pos = m.end()
            if m.group('ws'):
                continue
            for kind, group in ((TokenType.IDENT, 'ident'), (TokenType.NUMBER, 'number'), (TokenType.OPER, 'oper')):
                if m.group(group):
                    self.token = (kind, m.group(group))
                    return
        self.token_pos = self.pos
        self.token = (TokenType.END, None)

    @property
    def token_type(self):
        return self.token[0]

    @property
    def token_value(self):
        return self.token[1]

    @property
    def column(self):
        return self.offset + self.token_pos

    def is_oper(self, *values):
        return self.token_type == TokenType.OPER and self.token_value in values

    def expect(self, value):
        if not self.is_oper(value):
            raise self.error(f"expected '{value}'")
        self.next()

    def error(self, msg):
        return ParseError(msg, self.source, self.column)


@dataclass
class Node:
    """
        Parse tree node. `kind` is one of: number, imaginary, variable, partial, differential,
        slots, neg, add, sub, mul, div, wedge, power. `value` carries the literal payload
        (integer, index, slot list or exponent) and `args` the child nodes.
    """
    kind: str
    pos: int
    value: object = None
    args: List['Node'] = field(default_factory=list)


def parse_tree(text, source=None, offset=0):
    stream = TokenStream(text, source, offset)
    if stream.token_type == TokenType.END:
        raise stream.error('expression expected')
    node = _parse_sum(stream)
    if stream.token_type != TokenType.END:
        raise stream.error(f"unexpected token '{stream.token_value}'")
    return node


def _parse_sum(stream):
    node = _parse_product(stream)
    while stream.is_oper('+', '-'):
        op, pos = stream.token_value, stream.column
        stream.next()
        node = Node('add' if op == '+' else 'sub', pos, args=[node, _parse_product(stream)])
    return node


def _parse_product(stream):
    node = _parse_unary(stream)
    while stream.is_oper('*', '/', '['):
        op, pos = stream.token_value, stream.column
        if op != '[':
            stream.next()
        # `coef [ ... ]` multiplies without an explicit star
        node = Node('div' if op == '/' else 'mul', pos, args=[node, _parse_unary(stream)])
    return node


def _parse_unary(stream):
    if stream.is_oper('-', '+'):
        op, pos = stream.token_value, stream.column
        stream.next()
        arg = _parse_unary(stream)
        return Node('neg', pos, args=[arg]) if op == '-' else arg
    return _parse_wedge(stream)


def _parse_wedge(stream):
    node = _parse_power(stream)
    while stream.is_oper('^'):
        pos = stream.column
        stream.next()
        node = Node('wedge', pos, args=[node, _parse_power(stream)])
    return node


def _parse_power(stream):
    node = _parse_atom(stream)
    if stream.is_oper('**'):
        pos = stream.column
        stream.next()
        if stream.token_type != TokenType.NUMBER:
            raise stream.error('integer exponent expected after **')
        exponent = int(stream.token_value)
        stream.next()
        node = Node('power', pos, exponent, [node])
    return node


def _parse_atom(stream):
    token, value = stream.token
    pos = stream.column
    if token == TokenType.NUMBER:
        stream.next()
        return Node('number', pos, int(value))
    if token == TokenType.IDENT:
        if value == 'i':
            stream.next()
            return Node('imaginary', pos)
        m = IDENT.match(value)
        if not m:
            raise stream.error(f"unknown name '{value}'")
        stream.next()
        kind = {'x': 'variable', 'd': 'partial', 'dx': 'differential'}[m.group(1)]
        return Node(kind, pos, int(m.group(2)))
    if stream.is_oper('('):
        stream.next()
        node = _parse_sum(stream)
        stream.expect(')')
        return node
    if stream.is_oper('['):
        stream.next()
        return Node('slots', pos, _parse_slots(stream))
    if token == TokenType.END:
        raise stream.error('unexpected end of input')
    raise stream.error(f"unexpected token '{value}'")


def _parse_slots(stream):
    slots = [[]]
    while not stream.is_oper(']'):
        if stream.is_oper('|'):
            slots.append([])
            stream.next()
            continue
        m = IDENT.match(stream.token_value or '') if stream.token_type == TokenType.IDENT else None
        if not m or m.group(1) != 'd':
            raise stream.error("derivative 'd<k>', '|' or ']' expected in operator slots")
        slots[-1].append(int(m.group(2)))
        stream.next()
    stream.next()
    return slots


def max_index(text):
    """ Largest variable index named anywhere in `text` (0 if none). """
    return max((int(m.group(2)) for m in re.finditer(r"\b(x|d|dx)([1-9][0-9]*)\b", text)), default=0)


class _Evaluator:
    """ Bottom-up evaluation of a parse tree into library values on R^dim. """

    def __init__(self, dim, source):
        self.dim = dim
        self.source = source

    def error(self, node, msg):
        return ParseError(msg, self.source, node.pos)

    def index(self, node):
        if node.value > self.dim:
            raise self.error(node, f"index {node.value} exceeds the dimension {self.dim}")
        return node.value - 1

    def __call__(self, node):
        handler = getattr(self, '_' + node.kind)
        try:
            return handler(node)
        except ParseError:
            raise
        except DQError as e:
            raise self.error(node, str(e)) from e

    def _number(self, node):
        return GaussianRational(node.value)

    def _imaginary(self, node):
        return I

    def _variable(self, node):
        return Polynomial.variable(self.dim, self.index(node))

    def _partial(self, node):
        return PolyVector.basis(self.dim, self.index(node))

    def _differential(self, node):
        return CovectorField.basis(self.dim, self.index(node))

    def _slots(self, node):
        slots = []
        for mu in node.value:
            if any(k > self.dim for k in mu):
                raise self.error(node, f"derivative index exceeds the dimension {self.dim}")
            slots.append(tuple(k - 1 for k in mu))
        return MultiDiffOp(self.dim, len(slots), {tuple(slots): 1})

    def _neg(self, node):
        return -self(node.args[0])

    def _promote_pair(self, node, a, b):
        """ Bring two summands to a common kind: scalars and polynomials lift into the other side. """
        rank = lambda v: 0 if is_scalar(v) else 1 if isinstance(v, Polynomial) else 2
        if rank(a) < rank(b):
            return self._lift(node, a, b), b
        if rank(b) < rank(a):
            return a, self._lift(node, b, a)
        if rank(a) == 2 and type(a) is not type(b):
            raise self.error(node, f"cannot combine {_kind_name(a)} and {_kind_name(b)}")
        return a, b

    def _lift(self, node, low, like):
        if isinstance(like, (Polynomial, PolyVector, MultiDiffOp)) and is_scalar(low):
            low = Polynomial.constant(self.dim, low)
        if isinstance(like, Polynomial):
            return low
        if isinstance(like, PolyVector):
            return PolyVector.function(low)
        if isinstance(like, MultiDiffOp):
            return MultiDiffOp.function(low)
        raise self.error(node, f"cannot combine {_kind_name(low)} and {_kind_name(like)}")

    def _add(self, node):
        a, b = self._promote_pair(node, self(node.args[0]), self(node.args[1]))
        return a + b

    def _sub(self, node):
        a, b = self._promote_pair(node, self(node.args[0]), self(node.args[1]))
        return a - b

    def _mul(self, node):
        a, b = self(node.args[0]), self(node.args[1])
        low = lambda v: is_scalar(v) or isinstance(v, Polynomial)
        if low(a):
            if low(b):
                return a * b
            return b * a
        if low(b):
            return a * b
        if isinstance(a, PolyVector) and isinstance(b, PolyVector):
            raise self.error(node, "multivectors are multiplied with '^'")
        raise self.error(node, f"cannot multiply {_kind_name(a)} by {_kind_name(b)}")

    def _div(self, node):
        a, b = self(node.args[0]), self(node.args[1])
        if isinstance(b, Polynomial) and b.is_constant():
            b = b.constant_term()
        if not is_scalar(b):
            raise self.error(node, 'division is only by nonzero constants')
        if not b:
            raise self.error(node, 'division by zero')
        return a * (GaussianRational(1) / b)

    def _wedge(self, node):
        a, b = self(node.args[0]), self(node.args[1])
        a, b = (self._as_multivector(node, v) for v in (a, b))
        return wedge(a, b)

    def _as_multivector(self, node, v):
        if is_scalar(v):
            v = Polynomial.constant(self.dim, v)
        if isinstance(v, Polynomial):
            return PolyVector.function(v)
        if isinstance(v, PolyVector):
            return v
        raise self.error(node, f"'^' needs multivectors, got {_kind_name(v)}")

    def _power(self, node):
        base = self(node.args[0])
        if not (is_scalar(base) or isinstance(base, Polynomial)):
            raise self.error(node, f"'**' applies to polynomials, got {_kind_name(base)}")
        return base ** node.value


def _kind_name(v):
    if is_scalar(v):
        return 'a scalar'
    if isinstance(v, PolyVector):
        return f"a degree-{v.degree} multivector"
    if isinstance(v, MultiDiffOp):
        return f"an arity-{v.arity} operator"
    if isinstance(v, CovectorField):
        return 'a covector'
    return 'a polynomial'


def _coerce(value, kind, dim, node, source):
    fail = lambda: ParseError(f"expected a {kind}, got {_kind_name(value)}", source, node.pos)
    if is_scalar(value):
        value = Polynomial.constant(dim, value)
    if kind == 'polynomial':
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, PolyVector) and value.degree == 0:
            return value.as_function()
        raise fail()
    if kind == 'multivector':
        if isinstance(value, Polynomial):
            return PolyVector.function(value)
        if isinstance(value, PolyVector):
            return value
        raise fail()
    if kind == 'covector':
        if isinstance(value, CovectorField):
            return value
        if isinstance(value, Polynomial) and not value:
            return CovectorField(dim)
        raise fail()
    if kind == 'operator':
        if isinstance(value, Polynomial):
            return MultiDiffOp.function(value)
        if isinstance(value, MultiDiffOp):
            return value
        raise fail()
    raise ParseError(f"unknown expression kind '{kind}'")


VALUE_KINDS = ('polynomial', 'multivector', 'covector', 'operator')


def parse_value(text, kind, dim=None, source=None, offset=0):
    if dim is None:
        dim = max_index(text)
    source = source if source is not None else text
    tree = parse_tree(text, source, offset)
    value = _Evaluator(dim, source)(tree)
    return _coerce(value, kind, dim, tree, source)


SERIES_ENTRY = re.compile(r"^\s*([0-9]+)\s*:")


def _zero_element(element, dim, degree):
    if element == 'polynomial':
        return Polynomial.zero(dim)
    if element == 'multivector':
        return PolyVector.zero(dim, degree or 0)
    if element == 'operator':
        return MultiDiffOp.zero(dim, degree or 0)
    raise ParseError(f"series of '{element}' values are not supported")


def parse_series(text, element, order, dim=None, degree=None):
    """
        Read 'k: expr; k: expr' into an HbarSeries of the given order. A bare expression is the
        hbar^0 entry, missing entries are zero and '0' alone is the zero series. `degree` is the
        degree (or arity) used for the zero entries.
    """
    if dim is None:
        dim = max_index(text)
    entries = {}
    start = 0
    for piece in text.split(';'):
        offset = start
        start += len(piece) + 1
        if not piece.strip():
            raise ParseError('empty series entry', text, offset)
        m = SERIES_ENTRY.match(piece)
        k = 0
        if m:
            k = int(m.group(1))
            offset += m.end()
            piece = piece[m.end():]
        if k > order:
            raise ParseError(f"entry of order {k} exceeds the truncation order {order}", text, offset)
        if k in entries:
            raise ParseError(f"duplicate entry for order {k}", text, offset)
        entries[k] = parse_value(piece, element, dim, source=text, offset=offset)
    zero = _zero_element(element, dim, degree)
    return HbarSeries(entries.get(k, zero) for k in range(order + 1))


def parse(text, kind, dim=None, order=None, element='polynomial', degree=None):
    """ Parse `text` as one of VALUE_KINDS or, with kind='series', as an hbar-series of `element`. """
    if kind == 'series':
        if order is None:
            raise ParseError('a series needs its truncation order')
        return parse_series(text, element, order, dim, degree)
    if kind not in VALUE_KINDS:
        raise ParseError(f"unknown expression kind '{kind}'")
    return parse_value(text, kind, dim)
