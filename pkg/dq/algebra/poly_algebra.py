''' 
Date: 2026-09-02 11:30:18
LastEditTime: 2026-10-12 16:40:09
Description: 
    Polynomial functions on R^n over Q(i): the desk-scale model of the algebra of smooth functions.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

from collections import defaultdict

from dq.algebra.scalar_series import ZERO, GaussianRational, as_scalar, is_scalar
from dq.util.errors import UsageError


def _monomial_key(exps):
    # higher total degree first, then lexicographic with x1 dominating
    return (-sum(exps), tuple(-e for e in exps))


class Polynomial:
    """
        Sparse polynomial in x_1..x_n. `terms` maps exponent tuples (e_1, ..., e_n) to non-zero
        GaussianRational coefficients. Variable indices are 0-based in the API.
    """
    __slots__ = ('_dim', '_terms', '_hash')

    def __init__(self, dim, terms=None):
        if dim < 0:
            raise UsageError(f"dimension must be non-negative, got {dim}")
        self._dim = dim
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != dim or any(e < 0 for e in exps):
                raise UsageError(f"invalid exponent {exps} for dimension {dim}")
            coeff = as_scalar(coeff)
            if coeff:
                clean[exps] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def one(cls, dim):
        return cls.constant(dim, 1)

    @classmethod
    def constant(cls, dim, c):
        return cls(dim, {(0,) * dim: c})

    @classmethod
    def variable(cls, dim, i):
        if not 0 <= i < dim:
            raise UsageError(f"variable index {i} out of range for dimension {dim}")
        exps = [0] * dim
        exps[i] = 1
        return cls(dim, {tuple(exps): 1})

    @classmethod
    def monomial(cls, dim, exps, coeff=1):
        return cls(dim, {tuple(exps): coeff})

    @property
    def dim(self):
        return self._dim

    @property
    def terms(self):
        """ (exponents, coefficient) pairs in canonical order. """
        return [(e, self._terms[e]) for e in sorted(self._terms, key=_monomial_key)]

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), ZERO)

    @property
    def degree(self):
        return max((sum(e) for e in self._terms), default=0)

    def is_constant(self):
        return all(sum(e) == 0 for e in self._terms)

    def constant_term(self):
        return self.coefficient((0,) * self._dim)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other._dim != self._dim:
                raise UsageError(f"dimension mismatch: {self._dim} vs {other._dim}")
            return other
        if is_scalar(other):
            return Polynomial.constant(self._dim, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, ZERO) + c
        return Polynomial(self._dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self._dim, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return Polynomial(self._dim)
        return Polynomial(self._dim, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        other = self._coerce(other)
        terms = defaultdict(lambda: ZERO)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms[e] + c1 * c2
        return Polynomial(self._dim, terms)

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self.scale(GaussianRational(1) / as_scalar(other))

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise UsageError(f"polynomial powers need a non-negative integer exponent, got {exponent!r}")
        result = Polynomial.one(self._dim)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derive(self, i):
        """ Partial derivative with respect to x_{i+1}. """
        if not 0 <= i < self._dim:
            raise UsageError(f"variable index {i} out of range for dimension {self._dim}")
        terms = {}
        for e, c in self._terms.items():
            if e[i] == 0:
                continue
            new = list(e)
            new[i] -= 1
            terms[tuple(new)] = c * e[i]
        return Polynomial(self._dim, terms)

    def derive_multi(self, multi_index):
        """ Apply the partials listed in `multi_index` (a multiset of variable indices). """
        result = self
        for i in multi_index:
            if not result:
                break
            result = result.derive(i)
        return result

    def evaluate(self, point):
        if len(point) != self._dim:
            raise UsageError(f"point has {len(point)} coordinates, polynomial has dimension {self._dim}")
        point = [as_scalar(p) for p in point]
        total = ZERO
        for e, c in self._terms.items():
            value = c
            for p, k in zip(point, e):
                if k:
                    value = value * p ** k
            total = total + value
        return total

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if is_scalar(other):
            other = Polynomial.constant(self._dim, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._dim, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self._dim}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for e, c in self.terms:
            mono = '*'.join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}**{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append('-' + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return join_signed(pieces)


def join_signed(pieces):
    """ Join term strings with ' + ', folding a leading minus into ' - '. """
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith('-'):
            text += ' - ' + piece[1:]
        else:
            text += ' + ' + piece
    return text


def poly_ring_ops(f, g):
    """ Sum, difference and product of two polynomials of equal dimension. """
    if f.dim != g.dim:
        raise UsageError(f"dimension mismatch: {f.dim} vs {g.dim}")
    return {'add': f + g, 'sub': f - g, 'mul': f * g}


def partial_derive(f, i):
    return f.derive(i)


def evaluate(f, point):
    return f.evaluate(point)
