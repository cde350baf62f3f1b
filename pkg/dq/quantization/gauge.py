''' 
Date: 2026-09-12 10:44:39
LastEditTime: 2026-10-15 11:26:50
Description: 
    Formal Poisson structures, formal vector fields and their Baker-Campbell-Hausdorff product,
    and the gauge action of degree-0 formal elements on both DGLAs.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import itertools
import math
from collections import defaultdict
from fractions import Fraction

from dq.algebra.poly_algebra import Polynomial
from dq.algebra.scalar_series import HbarSeries
from dq.complexes.multidiff import MultiDiffOp, compose, identity
from dq.complexes.polyvector import PolyVector, poisson_bracket, schouten_bracket
from dq.util.errors import DegreeError, UsageError


def _formal_multivector(coeffs, degree, label):
    coeffs = list(coeffs)
    if not coeffs:
        raise UsageError(f"a formal {label} needs at least its order-0 coefficient")
    dims = {c.dim for c in coeffs}
    if len(dims) != 1:
        raise UsageError(f"formal {label} mixes dimensions {sorted(dims)}")
    dim = dims.pop()
    clean = []
    for k, c in enumerate(coeffs):
        if c and c.degree != degree:
            raise DegreeError(f"hbar^{k} coefficient of a formal {label} has degree {c.degree}")
        clean.append(c if c else PolyVector.zero(dim, degree))
    return HbarSeries(clean)


def formal_vector_field(coeffs):
    """ X = sum_k hbar^k X_k as an HbarSeries of vector fields. """
    return _formal_multivector(coeffs, 1, 'vector field')


def formal_bivector(coeffs):
    """ pi_hbar = pi_0 + hbar pi_1 + ... as an HbarSeries of bivectors. """
    return _formal_multivector(coeffs, 2, 'bivector')


def formal_poisson_bracket(P, F, G):
    """ {F, G}_hbar = sum_n hbar^n sum_{i+j+k=n} pi_i(dF_j, dG_k). """
    if not (P.order == F.order == G.order):
        raise UsageError(f"truncation order mismatch: {P.order}, {F.order}, {G.order}")
    dim = P[0].dim
    out = []
    for n in range(P.order + 1):
        acc = Polynomial.zero(dim)
        for i in range(n + 1):
            if not P[i]:
                continue
            for j in range(n - i + 1):
                acc = acc + poisson_bracket(P[i], F[j], G[n - i - j])
        out.append(acc)
    return HbarSeries(out)


def mc_residual_poisson(P):
    """ d pi + 1/2 [pi, pi]_S with d = 0, order by order. """
    dim = P[0].dim
    out = []
    for n in range(P.order + 1):
        acc = PolyVector.zero(dim, 3)
        for a in range(n + 1):
            if P[a] and P[n - a]:
                acc = acc + Fraction(1, 2) * schouten_bracket(P[a], P[n - a])
        out.append(acc)
    return HbarSeries(out)


def _series_schouten(A, B):
    return A.mul(B, product=schouten_bracket)


def _dynkin_coefficients(max_length):
    """
        Coefficients of log(e^A e^B) on right-nested bracket words in the letters 'A', 'B':
            sum_k (-1)^{k-1}/k sum [A^{r_1} B^{s_1} ... A^{r_k} B^{s_k}] / (L * prod r_i! s_i!)
        for words of length L <= max_length.
    """
    blocks = [(r, s) for r in range(max_length + 1) for s in range(max_length + 1 - r) if r + s > 0]
    coefficients = defaultdict(Fraction)

    def extend(chosen, length):
        if chosen:
            k = len(chosen)
            weight = Fraction((-1) ** (k - 1), k * length)
            for r, s in chosen:
                weight /= math.factorial(r) * math.factorial(s)
            word = ''.join('A' * r + 'B' * s for r, s in chosen)
            coefficients[word] += weight
        for r, s in blocks:
            if length + r + s <= max_length:
                extend(chosen + [(r, s)], length + r + s)

    extend([], 0)
    return {w: c for w, c in coefficients.items() if c}


def bch(X, Y, order=None):
    """
        Z with exp(hbar Z) = exp(hbar X) exp(hbar Y) up to hbar^order, from the Dynkin series.
        Words longer than order + 1 carry at least hbar^{order+2} and are dropped.
    """
    if X.order != Y.order:
        raise UsageError(f"truncation order mismatch: {X.order} vs {Y.order}")
    if order is None:
        order = X.order
    if order > X.order:
        raise UsageError(f"cannot raise truncation order {X.order} to {order}")
    X, Y = X.truncate(order), Y.truncate(order)
    dim = X[0].dim
    zero = PolyVector.zero(dim, 1)
    # hbar X and hbar Y, carried one order further so that Z can be divided by hbar
    letters = {
        'A': HbarSeries([zero] + list(X.coeffs)),
        'B': HbarSeries([zero] + list(Y.coeffs)),
    }
    nested = {}

    def bracket_word(word):
        if word not in nested:
            if len(word) == 1:
                nested[word] = letters[word]
            else:
                nested[word] = _series_schouten(letters[word[0]], bracket_word(word[1:]))
        return nested[word]

    total = HbarSeries.zeros(zero, order + 1)
    for word, c in sorted(_dynkin_coefficients(order + 1).items()):
        term = bracket_word(word)
        if term:
            total = total + term.scale(c)
    return total.unshift(1)


def _check_gauge_element(g):
    if g[0]:
        raise UsageError('the gauge element must carry an overall factor hbar (vanishing hbar^0 term)')


def gauge_act_dgla(g, a, dgla):
    """
        exp(g) . a = sum_n (ad g)^n a / n! - sum_n (ad g)^n dg / (n+1)!, truncated at the order of a.
        `g` is a degree-0 series with vanishing hbar^0 term, so (ad g)^n raises the hbar-order by n.
    """
    if g.order != a.order:
        raise UsageError(f"truncation order mismatch: {g.order} vs {a.order}")
    _check_gauge_element(g)
    result = a
    term = a
    for n in range(1, a.order + 1):
        term = dgla.series_bracket(g, term).scale(Fraction(1, n))
        result = result + term
    correction = dgla.series_differential(g)
    for n in range(a.order + 1):
        if n:
            correction = dgla.series_bracket(g, correction).scale(Fraction(1, n + 1))
        result = result - correction
    return result.map(lambda c: c if c else dgla.zero(1))


def gauge_apply_bivector(X, P, order=None):
    """
        exp(L)(P) with L = sum_k hbar^{k+1} [X_k, .]_S, i.e. sum_m L^m(P) / m!.
    """
    if X.order != P.order:
        raise UsageError(f"truncation order mismatch: {X.order} vs {P.order}")
    if order is not None and order != P.order:
        X, P = X.truncate(order), P.truncate(order)
    if any(c and c.degree != 1 for c in X) or any(c and c.degree != 2 for c in P):
        raise DegreeError('gauge action needs a formal vector field acting on a formal bivector')
    generator = X.shift(1)
    result = P
    term = P
    for m in range(1, P.order + 1):
        term = _series_schouten(generator, term).scale(Fraction(1, m))
        if term.is_zero():
            break
        result = result + term
    dim = P[0].dim
    return result.map(lambda c: c if c else PolyVector.zero(dim, 2))


def operator_log(T):
    """
        log T = sum_k (-1)^{k+1} (T - id)^k / k under composition, for T = id + O(hbar).
        exp(ad log T) then acts on bidifferential operators as conjugation by T.
    """
    dim = T.dim
    after = lambda A, B: compose(A, B, 0)
    nilpotent = T.terms.with_coeff(0, MultiDiffOp.zero(dim, 1))
    result = HbarSeries.zeros(MultiDiffOp.zero(dim, 1), T.order)
    power = nilpotent
    for k in range(1, T.order + 1):
        result = result + power.scale(Fraction((-1) ** (k + 1), k))
        power = power.mul(nilpotent, product=after)
    return result.map(lambda c: c if c else MultiDiffOp.zero(dim, 1))


def operator_exp(g):
    """ exp g = sum_k g^k / k! under composition, inverse of operator_log. """
    _check_gauge_element(g)
    dim = g[0].dim
    after = lambda A, B: compose(A, B, 0)
    result = HbarSeries.constant(identity(dim), g.order)
    power = result
    for k in range(1, g.order + 1):
        power = power.mul(g, product=after).scale(Fraction(1, k))
        result = result + power
    return result
