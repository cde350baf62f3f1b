''' 
Date: 2026-09-06 17:12:44
LastEditTime: 2026-10-14 09:37:18
Description: 
    Multidifferential operators on polynomial functions: application, insertion, the Gerstenhaber
    product and bracket, and the Hochschild differential.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

from collections import defaultdict
from functools import lru_cache

from dq.algebra.poly_algebra import Polynomial, join_signed
from dq.algebra.scalar_series import is_scalar
from dq.complexes.base_dgla import BaseDGLA
from dq.complexes.polyvector import coefficient_prefix
from dq.util.errors import DegreeError, UsageError


def _parity_sign(exponent):
    return -1 if exponent % 2 else 1


class MultiDiffOp:
    """
        Arity-n operator sum c(x) * d^{mu_1} (x) ... (x) d^{mu_n}.

        `terms` maps a tuple of n sorted multi-indices (tuples of 0-based variable indices, repeats
        allowed) to the polynomial coefficient. Arity 0 operators are functions with key ().
    """
    __slots__ = ('_dim', '_arity', '_terms', '_hash')

    def __init__(self, dim, arity, terms=None):
        if arity < 0:
            raise UsageError(f"arity must be non-negative, got {arity}")
        self._dim = dim
        self._arity = arity
        clean = {}
        for slots, coeff in (terms or {}).items():
            slots = tuple(tuple(sorted(mu)) for mu in slots)
            if len(slots) != arity:
                raise UsageError(f"term with {len(slots)} slots in an arity-{arity} operator")
            if any(not 0 <= i < dim for mu in slots for i in mu):
                raise UsageError(f"derivative index out of range in {slots} for dimension {dim}")
            if is_scalar(coeff):
                coeff = Polynomial.constant(dim, coeff)
            if coeff.dim != dim:
                raise UsageError(f"dimension mismatch: coefficient on R^{coeff.dim}, operator on R^{dim}")
            if slots in clean:
                coeff = clean[slots] + coeff
            if coeff:
                clean[slots] = coeff
            else:
                clean.pop(slots, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls, dim, arity):
        return cls(dim, arity)

    @classmethod
    def function(cls, f):
        return cls(f.dim, 0, {(): f})

    @classmethod
    def from_terms(cls, dim, arity, pairs):
        acc = defaultdict(lambda: Polynomial.zero(dim))
        for slots, coeff in pairs:
            key = tuple(tuple(sorted(mu)) for mu in slots)
            acc[key] = acc[key] + coeff
        return cls(dim, arity, acc)

    @property
    def dim(self):
        return self._dim

    @property
    def arity(self):
        return self._arity

    @property
    def terms(self):
        return sorted(self._terms.items())

    def coefficient(self, slots):
        key = tuple(tuple(sorted(mu)) for mu in slots)
        return self._terms.get(key, Polynomial.zero(self._dim))

    def max_order(self):
        """ Highest number of derivatives in any single slot. """
        return max((len(mu) for slots in self._terms for mu in slots), default=0)

    def swap(self):
        """ D'(f, g) = D(g, f) for a bidifferential operator. """
        if self._arity != 2:
            raise DegreeError(f"swap needs an arity-2 operator, got arity {self._arity}")
        return MultiDiffOp(self._dim, 2, {(b, a): c for (a, b), c in self._terms.items()})

    def as_function(self):
        if self._arity != 0:
            raise DegreeError(f"arity-{self._arity} operator is not a function")
        return self._terms.get((), Polynomial.zero(self._dim))

    def _check(self, other):
        if not isinstance(other, MultiDiffOp):
            raise TypeError(f"expected MultiDiffOp, got {type(other).__name__}")
        if other._dim != self._dim:
            raise UsageError(f"dimension mismatch: {self._dim} vs {other._dim}")

    def __add__(self, other):
        if not isinstance(other, MultiDiffOp):
            return NotImplemented
        self._check(other)
        if other._arity != self._arity:
            if not other._terms:
                return self
            if not self._terms:
                return other
            raise UsageError(f"cannot add operators of arity {self._arity} and {other._arity}")
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms[key] + c if key in terms else c
        return MultiDiffOp(self._dim, self._arity, terms)

    def __neg__(self):
        return MultiDiffOp(self._dim, self._arity, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiDiffOp):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """ Multiply every coefficient by a scalar or a polynomial (left module structure). """
        if is_scalar(other) or isinstance(other, Polynomial):
            return MultiDiffOp(self._dim, self._arity, {k: c * other for k, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, *args):
        return apply(self, list(args))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, MultiDiffOp):
            return NotImplemented
        if not self._terms and not other._terms:
            return self._dim == other._dim
        return (self._dim, self._arity, self._terms) == (other._dim, other._arity, other._terms)

    def __hash__(self):
        if self._hash is None:
            if not self._terms:
                self._hash = hash((self._dim, 'zero-op'))
            else:
                self._hash = hash((self._dim, self._arity, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiDiffOp({self._dim}, {self._arity}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return '0'
        if self._arity == 0:
            return str(self._terms[()])
        pieces = []
        for slots, c in self.terms:
            body = '[ ' + ' | '.join(' '.join(f"d{i + 1}" for i in mu) for mu in slots) + ' ]'
            pieces.append(coefficient_prefix(c, body, ' '))
        return join_signed(pieces)


def identity(dim):
    return MultiDiffOp(dim, 1, {((),): 1})


def mult_op(dim):
    return MultiDiffOp(dim, 2, {((), ()): 1})


def apply(D, args):
    if len(args) != D.arity:
        raise UsageError(f"arity-{D.arity} operator applied to {len(args)} arguments")
    if any(a.dim != D.dim for a in args):
        raise UsageError(f"argument dimensions {[a.dim for a in args]} do not match operator dimension {D.dim}")
    derivatives = {}
    result = Polynomial.zero(D.dim)
    for slots, c in D.terms:
        term = c
        for j, mu in enumerate(slots):
            if (j, mu) not in derivatives:
                derivatives[(j, mu)] = args[j].derive_multi(mu)
            term = term * derivatives[(j, mu)]
            if not term:
                break
        result = result + term
    return result


@lru_cache(maxsize=4096)
def _leibniz_split(mu, n_slots):
    """
        Ways of distributing the derivatives in `mu` over a coefficient and `n_slots` arguments.
        Returns {(coefficient multi-index, per-slot extra multi-indices): multiplicity}.
    """
    states = {((), ((),) * n_slots): 1}
    for i in mu:
        nxt = defaultdict(int)
        for (coef_mi, extras), count in states.items():
            nxt[(coef_mi + (i,), extras)] += count
            for s in range(n_slots):
                moved = extras[:s] + (extras[s] + (i,),) + extras[s + 1:]
                nxt[(coef_mi, moved)] += count
        states = nxt
    return dict(states)


def compose(D, E, slot):
    """
        Unsigned insertion D(a_0, ..., E(a_slot, ..), ..), expanded into canonical terms with the
        Leibniz rule.
    """
    if D.dim != E.dim:
        raise UsageError(f"dimension mismatch: {D.dim} vs {E.dim}")
    if not 0 <= slot < D.arity:
        raise UsageError(f"insertion slot {slot} out of range for arity {D.arity}")
    m = E.arity
    acc = defaultdict(lambda: Polynomial.zero(D.dim))
    for d_slots, c in D.terms:
        mu = d_slots[slot]
        before, after = d_slots[:slot], d_slots[slot + 1:]
        for e_slots, e in E.terms:
            for (coef_mi, extras), count in _leibniz_split(mu, m).items():
                if len(coef_mi) > e.degree:
                    continue
                de = e.derive_multi(coef_mi)
                if not de:
                    continue
                inner = tuple(tuple(sorted(nu + extra)) for nu, extra in zip(e_slots, extras))
                key = before + inner + after
                acc[key] = acc[key] + c * de * count
    return MultiDiffOp(D.dim, D.arity + m - 1, acc)


def gerst_product(D, E):
    """ D o E = sum_j (-1)^{(m-1)j} D(.., E(..) at slot j, ..) for E of arity m. """
    n, m = D.arity, E.arity
    if D.dim != E.dim:
        raise UsageError(f"dimension mismatch: {D.dim} vs {E.dim}")
    result = MultiDiffOp.zero(D.dim, max(n + m - 1, 0))
    for j in range(n):
        result = result + _parity_sign((m - 1) * j) * compose(D, E, j)
    return result


def gerst_bracket(D, E):
    """ [D, E]_G = D o E - (-1)^{(n-1)(m-1)} E o D. """
    sign = _parity_sign((D.arity - 1) * (E.arity - 1))
    return gerst_product(D, E) - sign * gerst_product(E, D)


def hochschild_d(D):
    return gerst_bracket(mult_op(D.dim), D)


def hochschild_d_alternating(D):
    """
        The alternating-sum differential
            (-1)^n (dD)(a_0..a_n) = a_0 D(a_1..a_n) - sum_i (-1)^i D(.., a_i a_{i+1}, ..)
                                    + (-1)^{n-1} D(a_0..a_{n-1}) a_n.
        It equals -hochschild_d(D).
    """
    n = D.arity
    m = mult_op(D.dim)
    result = compose(m, D, 1)
    for i in range(n):
        result = result - _parity_sign(i) * compose(D, m, i)
    result = result + _parity_sign(n - 1) * compose(m, D, 0)
    return _parity_sign(n) * result


def is_normalized(D):
    if D.arity < 1:
        raise UsageError('normalization is defined for arity >= 1')
    return all(all(mu for mu in slots) for slots, _ in D.terms)


class GerstenhaberDGLA(BaseDGLA):
    """ Hochschild cochains with the Gerstenhaber bracket and d = [m, .]_G. """
    name = 'gerstenhaber'

    def degree(self, element):
        return element.arity - 1

    def bracket(self, a, b):
        return gerst_bracket(a, b)

    def differential(self, a):
        return hochschild_d(a)

    def zero(self, degree):
        return MultiDiffOp.zero(self.dim, degree + 1)
