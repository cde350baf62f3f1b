''' 
Date: 2026-09-03 15:47:02
LastEditTime: 2026-10-13 10:21:56
Description: 
    Multivector fields with the wedge product and the Schouten-Nijenhuis bracket, plus the
    Poisson toolkit built on bivectors (sharp map, brackets, Hamiltonian fields, Jacobiator).

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import itertools
from collections import defaultdict

from dq.algebra.poly_algebra import Polynomial, join_signed
from dq.algebra.scalar_series import is_scalar
from dq.complexes.base_dgla import BaseDGLA
from dq.util.errors import DegreeError, UsageError


def sort_with_sign(indices):
    """
        Sort a tuple of basis indices, returning (sign of the sorting permutation, sorted tuple),
        or None when an index repeats (the wedge vanishes).
    """
    if len(set(indices)) != len(indices):
        return None
    inversions = sum(1 for a, b in itertools.combinations(indices, 2) if a > b)
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


class PolyVector:
    """
        Multivector field of geometric degree k: sum of X^{i_1..i_k} d_{i_1}^...^d_{i_k}.
        Components are keyed by strictly increasing 0-based index tuples; degree 0 is a function.
    """
    __slots__ = ('_dim', '_degree', '_components', '_hash')

    def __init__(self, dim, degree, components=None):
        if degree < 0:
            raise DegreeError(f"multivector degree must be non-negative, got {degree}")
        self._dim = dim
        self._degree = degree
        clean = {}
        for key, coeff in (components or {}).items():
            key = tuple(key)
            if len(key) != degree or any(not 0 <= i < dim for i in key) \
                    or any(a >= b for a, b in zip(key, key[1:])):
                raise UsageError(f"invalid index tuple {key} for a degree-{degree} field on R^{dim}")
            if is_scalar(coeff):
                coeff = Polynomial.constant(dim, coeff)
            if coeff.dim != dim:
                raise UsageError(f"dimension mismatch: component on R^{coeff.dim}, field on R^{dim}")
            if coeff:
                clean[key] = coeff
        self._components = clean
        self._hash = None

    @classmethod
    def zero(cls, dim, degree):
        return cls(dim, degree)

    @classmethod
    def function(cls, f):
        return cls(f.dim, 0, {(): f})

    @classmethod
    def from_terms(cls, dim, degree, pairs):
        """ Build from (index tuple in any order, coefficient) pairs, applying antisymmetry. """
        acc = {}
        for indices, coeff in pairs:
            sorted_ = sort_with_sign(tuple(indices))
            if sorted_ is None:
                continue
            sign, key = sorted_
            if is_scalar(coeff):
                coeff = Polynomial.constant(dim, coeff)
            acc[key] = acc.get(key, Polynomial.zero(dim)) + sign * coeff
        return cls(dim, degree, acc)

    @classmethod
    def basis(cls, dim, *indices):
        return cls.from_terms(dim, len(indices), [(indices, 1)])

    @classmethod
    def vector_field(cls, components):
        """ Vector field from the list of its n component polynomials. """
        dim = len(components)
        return cls(dim, 1, {(i,): c for i, c in enumerate(components)})

    @property
    def dim(self):
        return self._dim

    @property
    def degree(self):
        return self._degree

    @property
    def shifted_degree(self):
        return self._degree - 1

    @property
    def components(self):
        return sorted(self._components.items())

    def component(self, indices):
        """ Component on any ordering of `indices`, with the antisymmetry sign applied. """
        sorted_ = sort_with_sign(tuple(indices))
        if sorted_ is None:
            return Polynomial.zero(self._dim)
        sign, key = sorted_
        return sign * self._components.get(key, Polynomial.zero(self._dim))

    def as_function(self):
        if self._degree != 0:
            raise DegreeError(f"degree-{self._degree} field is not a function")
        return self._components.get((), Polynomial.zero(self._dim))

    def is_constant(self):
        return all(c.is_constant() for c in self._components.values())

    def _check(self, other):
        if not isinstance(other, PolyVector):
            raise TypeError(f"expected PolyVector, got {type(other).__name__}")
        if other._dim != self._dim:
            raise UsageError(f"dimension mismatch: {self._dim} vs {other._dim}")

    def __add__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        self._check(other)
        if other._degree != self._degree:
            # zero lives in every degree
            if not other._components:
                return self
            if not self._components:
                return other
            raise DegreeError(f"cannot add multivectors of degrees {self._degree} and {other._degree}")
        comps = dict(self._components)
        for key, c in other._components.items():
            comps[key] = comps[key] + c if key in comps else c
        return PolyVector(self._dim, self._degree, comps)

    def __neg__(self):
        return PolyVector(self._dim, self._degree, {k: -c for k, c in self._components.items()})

    def __sub__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """ Multiply every component by a scalar or by a polynomial function. """
        if is_scalar(other) or isinstance(other, Polynomial):
            if isinstance(other, Polynomial) and other.dim != self._dim:
                raise UsageError(f"dimension mismatch: {self._dim} vs {other.dim}")
            return PolyVector(self._dim, self._degree, {k: c * other for k, c in self._components.items()})
        return NotImplemented

    __rmul__ = __mul__

    def partial(self, i):
        return PolyVector(self._dim, self._degree, {k: c.derive(i) for k, c in self._components.items()})

    def xi_derivative(self, i):
        """
            Right derivative with respect to the odd generator d_i: move d_i to the right end of
            each basis word and delete it.
        """
        if self._degree == 0:
            raise DegreeError('functions have no d_i dependence')
        comps = {}
        for key, c in self._components.items():
            if i not in key:
                continue
            pos = key.index(i)
            sign = -1 if (self._degree - 1 - pos) % 2 else 1
            comps[key[:pos] + key[pos + 1:]] = sign * c
        return PolyVector(self._dim, self._degree - 1, comps)

    def apply(self, f):
        """ Derivation action X(f) = sum X^i d_i f of a vector field. """
        if self._degree != 1:
            raise DegreeError(f"only vector fields act as derivations, got degree {self._degree}")
        result = Polynomial.zero(self._dim)
        for (i,), c in self._components.items():
            result = result + c * f.derive(i)
        return result

    def pair(self, *functions):
        """ <X, df_1 ... df_k> with the determinant pairing det[d_{i_a} f_b] (no 1/k!). """
        if len(functions) != self._degree:
            raise DegreeError(f"degree-{self._degree} field paired with {len(functions)} differentials")
        result = Polynomial.zero(self._dim)
        for key, c in self._components.items():
            for perm in itertools.permutations(range(self._degree)):
                sign, _ = sort_with_sign(perm)
                term = c * sign
                for b, a in enumerate(perm):
                    term = term * functions[b].derive(key[a])
                result = result + term
        return result

    def wedge(self, other):
        return wedge(self, other)

    def __xor__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return wedge(self, other)

    def __bool__(self):
        return bool(self._components)

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        if not self._components and not other._components:
            return self._dim == other._dim
        return (self._dim, self._degree, self._components) == (other._dim, other._degree, other._components)

    def __hash__(self):
        if self._hash is None:
            if not self._components:
                self._hash = hash((self._dim, 'zero-field'))
            else:
                self._hash = hash((self._dim, self._degree, frozenset(self._components.items())))
        return self._hash

    def __repr__(self):
        return f"PolyVector({self._dim}, {self._degree}, {str(self)!r})"

    def __str__(self):
        if not self._components:
            return '0'
        if self._degree == 0:
            return str(self._components[()])
        pieces = []
        for key, c in self.components:
            basis = '^'.join(f"d{i + 1}" for i in key)
            pieces.append(coefficient_prefix(c, basis, '*'))
        return join_signed(pieces)


def coefficient_prefix(coeff, body, glue):
    """ Render coeff*body, dropping unit coefficients and parenthesizing multi-term ones. """
    if coeff == 1:
        return body
    if coeff == -1:
        return '-' + body
    text = str(coeff)
    if len(coeff.terms) > 1:
        text = f"({text})"
    return f"{text}{glue}{body}"


class CovectorField:
    """ 1-form sum alpha_i dx_i with polynomial components. """
    __slots__ = ('_dim', '_components')

    def __init__(self, dim, components=None):
        components = list(components) if components is not None else [Polynomial.zero(dim)] * dim
        if len(components) != dim:
            raise UsageError(f"covector on R^{dim} needs {dim} components, got {len(components)}")
        clean = []
        for c in components:
            if is_scalar(c):
                c = Polynomial.constant(dim, c)
            if c.dim != dim:
                raise UsageError(f"dimension mismatch: component on R^{c.dim}, covector on R^{dim}")
            clean.append(c)
        self._dim = dim
        self._components = tuple(clean)

    @classmethod
    def differential(cls, f):
        return cls(f.dim, [f.derive(i) for i in range(f.dim)])

    @classmethod
    def basis(cls, dim, i):
        comps = [Polynomial.zero(dim)] * dim
        comps[i] = Polynomial.one(dim)
        return cls(dim, comps)

    @property
    def dim(self):
        return self._dim

    @property
    def components(self):
        return self._components

    def __add__(self, other):
        if not isinstance(other, CovectorField):
            return NotImplemented
        if other._dim != self._dim:
            raise UsageError(f"dimension mismatch: {self._dim} vs {other._dim}")
        return CovectorField(self._dim, [a + b for a, b in zip(self._components, other._components)])

    def __neg__(self):
        return CovectorField(self._dim, [-a for a in self._components])

    def __sub__(self, other):
        if not isinstance(other, CovectorField):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, Polynomial):
            return CovectorField(self._dim, [a * other for a in self._components])
        return NotImplemented

    __rmul__ = __mul__

    def pair(self, X):
        """ <X, alpha> for a vector field X. """
        if X.degree != 1:
            raise DegreeError(f"covectors pair with vector fields, got degree {X.degree}")
        return sum((X.component((i,)) * a for i, a in enumerate(self._components)), Polynomial.zero(self._dim))

    def __bool__(self):
        return any(self._components)

    def __eq__(self, other):
        if not isinstance(other, CovectorField):
            return NotImplemented
        return self._dim == other._dim and self._components == other._components

    def __hash__(self):
        return hash((self._dim, self._components))

    def __str__(self):
        pieces = [coefficient_prefix(c, f"dx{i + 1}", '*') for i, c in enumerate(self._components) if c]
        return join_signed(pieces) if pieces else '0'

    def __repr__(self):
        return f"CovectorField({self._dim}, {str(self)!r})"


def _check_dim(X, Y):
    if X.dim != Y.dim:
        raise UsageError(f"dimension mismatch: {X.dim} vs {Y.dim}")


def wedge(X, Y):
    _check_dim(X, Y)
    acc = defaultdict(lambda: Polynomial.zero(X.dim))
    for I, a in X.components:
        for J, b in Y.components:
            sorted_ = sort_with_sign(I + J)
            if sorted_ is None:
                continue
            sign, key = sorted_
            acc[key] = acc[key] + sign * (a * b)
    return PolyVector(X.dim, X.degree + Y.degree, acc)


def schouten_bracket(X, Y):
    """
        Schouten-Nijenhuis bracket of a degree-p and a degree-q field, of degree p+q-1.

        In the odd-variable picture (d_i <-> xi_i) it reads
            [X,Y] = sum_i (dX/dxi_i)_R * d_i Y - (-1)^{(p-1)(q-1)} (dY/dxi_i)_R * d_i X
        with right xi-derivatives. For two vector fields this is the Lie bracket; for a degree-0
        argument f it gives [X,f] = (dX/dxi_i)_R d_i f, i.e. X(f) when X is a vector field.
    """
    _check_dim(X, Y)
    p, q = X.degree, Y.degree
    if p + q == 0:
        return PolyVector.zero(X.dim, 0)
    sign = -1 if ((p - 1) * (q - 1)) % 2 else 1
    result = PolyVector.zero(X.dim, p + q - 1)
    for i in range(X.dim):
        if p > 0:
            dY = Y.partial(i)
            if dY:
                result = result + wedge(X.xi_derivative(i), dY)
        if q > 0:
            dX = X.partial(i)
            if dX:
                result = result - sign * wedge(Y.xi_derivative(i), dX)
    return result


def lie_derivative(X, Y):
    """ L_X Y = [X, Y]_S for a vector field X. """
    if X.degree != 1:
        raise DegreeError(f"Lie derivative along a degree-{X.degree} field")
    return schouten_bracket(X, Y)


def _check_bivector(pi):
    if pi.degree != 2:
        raise DegreeError(f"expected a bivector, got degree {pi.degree}")


def sharp(pi, alpha):
    """ The vector field V with pi(alpha, beta) = <V, beta> for every covector beta. """
    _check_bivector(pi)
    if alpha.dim != pi.dim:
        raise UsageError(f"dimension mismatch: {pi.dim} vs {alpha.dim}")
    comps = [Polynomial.zero(pi.dim) for _ in range(pi.dim)]
    a = alpha.components
    for (i, j), c in pi.components:
        comps[j] = comps[j] + c * a[i]
        comps[i] = comps[i] - c * a[j]
    return PolyVector.vector_field(comps) if pi.dim else PolyVector.zero(0, 1)


def poisson_bracket(pi, f, g):
    """ {f,g} = pi(df,dg) = sum_{i<j} pi^{ij}(d_i f d_j g - d_j f d_i g). """
    _check_bivector(pi)
    if not (pi.dim == f.dim == g.dim):
        raise UsageError(f"dimension mismatch: {pi.dim}, {f.dim}, {g.dim}")
    return pi.pair(f, g)


def hamiltonian_vf(pi, f):
    """ X_f = sharp(pi, df), so that X_f(g) = {f,g}. """
    return sharp(pi, CovectorField.differential(f))


def jacobiator(pi, f, g, h):
    """ Cyclic sum {f,{g,h}} + {g,{h,f}} + {h,{f,g}}. """
    pb = lambda a, b: poisson_bracket(pi, a, b)
    return pb(f, pb(g, h)) + pb(g, pb(h, f)) + pb(h, pb(f, g))


def is_poisson(pi):
    """ Returns (whether [pi,pi]_S vanishes, the trivector [pi,pi]_S). """
    _check_bivector(pi)
    witness = schouten_bracket(pi, pi)
    return not witness, witness


class SchoutenDGLA(BaseDGLA):
    """ Shifted multivector fields with the Schouten bracket and zero differential. """
    name = 'schouten'

    def degree(self, element):
        return element.shifted_degree

    def bracket(self, a, b):
        return schouten_bracket(a, b)

    def differential(self, a):
        return PolyVector.zero(self.dim, a.degree + 1)

    def zero(self, degree):
        return PolyVector.zero(self.dim, degree + 1)
