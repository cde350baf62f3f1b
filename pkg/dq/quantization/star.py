''' 
Date: 2026-09-10 13:05:27
LastEditTime: 2026-10-17 10:48:12
Description: 
    Star products as hbar-series of bidifferential operators: Moyal construction, application,
    associativity and Maurer-Cartan residuals, extraction of the induced bivector, and transport
    along equivalence operators.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import math
from collections import defaultdict
from fractions import Fraction

from joblib import Parallel, delayed

from dq.algebra.poly_algebra import Polynomial
from dq.algebra.scalar_series import I, HbarSeries, as_scalar
from dq.complexes.multidiff import (
    MultiDiffOp,
    apply,
    compose,
    gerst_bracket,
    hochschild_d,
    identity,
    is_normalized,
    mult_op,
)
from dq.complexes.polyvector import PolyVector
from dq.util.errors import DegreeError, DomainError, ExtractionError, UnsupportedError, UsageError


class StarProduct:
    """
        f * g = f g + sum_k hbar^k P_k(f, g), stored as the series (m, P_1, ..., P_N).
        The hbar^0 term must be the pointwise product and every P_k normalized.
    """

    def __init__(self, terms):
        if not isinstance(terms, HbarSeries):
            terms = HbarSeries(terms)
        P0 = terms[0]
        if P0 != mult_op(P0.dim):
            raise DomainError(f"order-0 term of a star product must be the pointwise product, got {P0}")
        for k, P in enumerate(terms.coeffs[1:], start=1):
            if P and (P.arity != 2 or not is_normalized(P)):
                raise DomainError(f"P_{k} = {P} is not a normalized bidifferential operator")
        self.terms = terms.map(lambda P: P if P else MultiDiffOp.zero(P0.dim, 2))

    @property
    def dim(self):
        return self.terms[0].dim

    @property
    def order(self):
        return self.terms.order

    def __getitem__(self, k):
        return self.terms[k]

    def deformation(self):
        """ The series P = S - m, vanishing at hbar^0. """
        return self.terms.with_coeff(0, MultiDiffOp.zero(self.dim, 2))

    def __call__(self, F, G):
        return star_apply(self, F, G)

    def __eq__(self, other):
        if not isinstance(other, StarProduct):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"StarProduct(dim={self.dim}, order={self.order})"


class EquivalenceOp:
    """ T = id + sum_m hbar^m T_m with every T_m normalized, so that T(1) = 1. """

    def __init__(self, terms):
        if not isinstance(terms, HbarSeries):
            terms = HbarSeries(terms)
        T0 = terms[0]
        if T0 != identity(T0.dim):
            raise DomainError(f"order-0 term of an equivalence must be the identity, got {T0}")
        for k, T in enumerate(terms.coeffs[1:], start=1):
            if T and (T.arity != 1 or not is_normalized(T)):
                raise DomainError(f"T_{k} = {T} is not a normalized differential operator")
        self.terms = terms.map(lambda T: T if T else MultiDiffOp.zero(T0.dim, 1))

    @property
    def dim(self):
        return self.terms[0].dim

    @property
    def order(self):
        return self.terms.order

    def __call__(self, F):
        return self.terms.mul(F, product=lambda T, f: apply(T, [f]))

    def inverse(self):
        return EquivalenceOp(self.terms.inverse(product=_after, inverse0=lambda _: identity(self.dim)))


def _after(A, B):
    """ A o B for arity-1 operators. """
    return compose(A, B, 0)


def formal_function(f, order):
    """ A polynomial viewed as an hbar-constant formal function. """
    return HbarSeries.constant(f, order)


def alpha_from_matrix(matrix):
    """ The constant bivector sum_{i<j} alpha^{ij} d_i ^ d_j from a full antisymmetric matrix. """
    if not isinstance(matrix, (list, tuple)) or not all(isinstance(row, (list, tuple)) for row in matrix):
        raise DomainError(f"alpha must be a list of matrix rows, got {matrix!r}")
    n = len(matrix)
    entries = [[_alpha_entry(v) for v in row] for row in matrix]
    if any(len(row) != n for row in entries):
        raise DomainError(f"alpha must be a square matrix, got rows of lengths {[len(r) for r in entries]}")
    for i in range(n):
        for j in range(n):
            if entries[i][j] != -entries[j][i]:
                raise DomainError(f"alpha is not antisymmetric at ({i + 1}, {j + 1})")
    return PolyVector(n, 2, {(i, j): entries[i][j] for i in range(n) for j in range(i + 1, n)})


def _alpha_entry(value):
    # exact entries only: integers, Fractions or 'p/q' strings
    if isinstance(value, str):
        try:
            value = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"alpha entry {value!r} is not a rational number 'p/q'") from None
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise DomainError(f"alpha entry {value!r} is not exact, write it as an integer or 'p/q'")
    return as_scalar(value)


def symplectic_alpha(n):
    """ sum_i d_{q_i} ^ d_{p_i} on R^{2n} with q_i = x_i and p_i = x_{n+i}. """
    return PolyVector(2 * n, 2, {(i, n + i): 1 for i in range(n)})


def _moyal_term(dim, pairs, k):
    # slotwise products of B = sum alpha^{ij} d_i (x) d_j, k factors
    power = {((), ()): Fraction(1)}
    for _ in range(k):
        nxt = defaultdict(Fraction)
        for (mu, nu), c in power.items():
            for i, j, a in pairs:
                nxt[(tuple(sorted(mu + (i,))), tuple(sorted(nu + (j,))))] += c * a
        power = nxt
    scale = (I / 2) ** k / math.factorial(k)
    terms = {key: scale * c for key, c in power.items() if c}
    return MultiDiffOp(dim, 2, terms)


def moyal_star(alpha, order, n_jobs=1, backend=None):
    """
        Moyal product exp(i hbar/2 alpha^{ij} d_i (x) d_j) truncated at hbar^order:
            P_k = (1/k!) (i/2)^k alpha^{i_1 j_1} ... alpha^{i_k j_k} d_{i_1..i_k} (x) d_{j_1..j_k}.
        The P_k are built independently, `n_jobs` at a time.
    """
    if alpha.degree != 2:
        raise DegreeError(f"alpha must be a bivector, got degree {alpha.degree}")
    if not alpha.is_constant():
        raise UnsupportedError('the Moyal product needs a constant-coefficient bivector')
    dim = alpha.dim
    pairs = []
    for (i, j), c in alpha.components:
        value = c.constant_term()
        pairs.append((i, j, value))
        pairs.append((j, i, -value))
    # real entries as plain Fractions
    pairs = [(i, j, v.re) if v.is_real() else (i, j, v) for i, j, v in pairs]
    jobs = (delayed(_moyal_term)(dim, pairs, k) for k in range(1, order + 1))
    higher = Parallel(n_jobs=n_jobs, backend=backend)(jobs)
    return StarProduct([mult_op(dim)] + list(higher))


def _check_orders(*series):
    orders = {s.order for s in series}
    if len(orders) != 1:
        raise UsageError(f"truncation order mismatch: {sorted(orders)}")


def star_apply(S, F, G):
    """ (F * G)_n = sum_{a+b+c=n} P_a(F_b, G_c). """
    _check_orders(S.terms, F, G)
    out = []
    for n in range(S.order + 1):
        acc = Polynomial.zero(S.dim)
        for a in range(n + 1):
            P = S[a]
            if not P:
                continue
            for b in range(n - a + 1):
                acc = acc + apply(P, [F[b], G[n - a - b]])
        out.append(acc)
    return HbarSeries(out)


def star_commutator(S, F, G):
    return star_apply(S, F, G) - star_apply(S, G, F)


def associator_residual(S, f, g, h):
    """ (f * g) * h - f * (g * h) for polynomials f, g, h. """
    F, G, H = (formal_function(p, S.order) for p in (f, g, h))
    return star_apply(S, star_apply(S, F, G), H) - star_apply(S, F, star_apply(S, G, H))


def first_order_skew(S):
    """ The bivector beta with beta(df, dg) = P_1(f, g) - P_1(g, f). """
    if S.order < 1:
        raise UsageError('the first-order term needs a star product of order >= 1')
    P1 = S[1]
    # checked on P_1 itself, symmetric higher-order terms would cancel in the skew part
    for slots, c in P1.terms:
        if any(len(mu) != 1 for mu in slots):
            raise ExtractionError(f"P_1 has the term {MultiDiffOp(S.dim, 2, {slots: c})}, "
                                  'which is not of first order in each slot')
    skew = P1 - P1.swap() if P1 else P1
    components = {}
    for slots, c in skew.terms:
        (i,), (j,) = slots
        if i < j:
            components[(i, j)] = c
    return PolyVector(S.dim, 2, components)


def mc_residual_star(P):
    """ R_n = d(P_n) + 1/2 sum_{a+b=n} [P_a, P_b]_G for P vanishing at hbar^0. """
    if P[0]:
        raise UsageError('the deformation series must vanish at order 0')
    dim = P[0].dim
    out = []
    for n in range(P.order + 1):
        acc = hochschild_d(P[n]) if P[n] else MultiDiffOp.zero(dim, 3)
        for a in range(1, n):
            if P[a] and P[n - a]:
                acc = acc + Fraction(1, 2) * gerst_bracket(P[a], P[n - a])
        out.append(acc if acc else MultiDiffOp.zero(dim, 3))
    return HbarSeries(out)


def equivalence_apply(T, S):
    """
        The star product a *' b = T(T^{-1} a * T^{-1} b), i.e.
            P'_n = sum_{r+s+t+u=n} T_r o P_s o (U_t (x) U_u) with U = T^{-1}.
    """
    if T.dim != S.dim:
        raise UsageError(f"dimension mismatch: {T.dim} vs {S.dim}")
    _check_orders(T.terms, S.terms)
    N = S.order
    U = T.inverse().terms
    inner = {}
    for s in range(N + 1):
        if not S[s]:
            continue
        for u in range(N + 1 - s):
            right = compose(S[s], U[u], 1)
            for t in range(N + 1 - s - u):
                inner[(s, t, u)] = compose(right, U[t], 0)
    out = []
    for n in range(N + 1):
        acc = MultiDiffOp.zero(S.dim, 2)
        for (s, t, u), Q in inner.items():
            r = n - s - t - u
            if r < 0 or not Q:
                continue
            acc = acc + compose(T.terms[r], Q, 0)
        out.append(acc)
    return StarProduct(out)
