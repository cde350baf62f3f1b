''' 
Date: 2026-09-16 20:03:15
LastEditTime: 2026-10-15 16:48:32
Description: 
    The HKR map from multivector fields to multidifferential operators, its cocycle and bracket
    checks, and low-arity checks of L-infinity morphism conditions.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import itertools
from dataclasses import dataclass
from typing import Callable

from tqdm import tqdm

from dq.complexes.multidiff import MultiDiffOp, gerst_bracket, hochschild_d
from dq.complexes.polyvector import schouten_bracket, sort_with_sign


def hkr_map(X):
    """
        D_X(a_1, ..., a_k) = sum_I X^I det[d_{i_a} a_b]. Functions map to arity-0 operators.
    """
    k = X.degree
    pairs = []
    for indices, c in X.components:
        for perm in itertools.permutations(range(k)):
            sign, _ = sort_with_sign(perm)
            slots = tuple((indices[p],) for p in perm)
            pairs.append((slots, sign * c))
    return MultiDiffOp.from_terms(X.dim, k, pairs)


def hkr_chain_check(X):
    return hochschild_d(hkr_map(X))


def hkr_bracket_defect(X, Y):
    """
        hkr([X, Y]_S) - [hkr X, hkr Y]_G together with whether it is Hochschild-closed.
    """
    defect = hkr_map(schouten_bracket(X, Y)) - gerst_bracket(hkr_map(X), hkr_map(Y))
    return defect, not hochschild_d(defect)


def hkr_formal(P):
    """ Coefficientwise HKR image of a formal multivector. """
    return P.map(hkr_map)


@dataclass(frozen=True)
class LInftyMapFamily:
    """ First two Taylor components of a would-be L-infinity morphism. """
    f1: Callable
    f2: Callable
    name: str = 'custom'


def _zero_homotopy(X, Y):
    return MultiDiffOp.zero(X.dim, max(X.degree + Y.degree - 2, 0))


def hkr_family():
    return LInftyMapFamily(f1=hkr_map, f2=_zero_homotopy, name='hkr')


def zero_family():
    return LInftyMapFamily(
        f1=lambda X: MultiDiffOp.zero(X.dim, X.degree),
        f2=_zero_homotopy,
        name='zero',
    )


LINFTY_FAMILY_LIST = {
    'hkr': hkr_family,
    'zero': zero_family,
}


def linfty_check(fam, samples, progress=False):
    """
        Check, per sample pair (x, y):
          antisymmetry      f2(x, y) = -(-1)^{|x||y|} f2(y, x)
          chain_map         d f1(x) = 0 and d f1(y) = 0 (the source differential is zero)
          bracket_homotopy  f1([x, y]_S) - [f1 x, f1 y]_G = d f2(x, y)
        with shifted degrees |x| = deg x - 1.
    """
    reports = []
    for X, Y in tqdm(samples, desc=f"linfty[{fam.name}]", disable=not progress):
        sign = -1 if (X.shifted_degree * Y.shifted_degree) % 2 else 1
        antisymmetry = fam.f2(X, Y) == -sign * fam.f2(Y, X)
        chain_map = not hochschild_d(fam.f1(X)) and not hochschild_d(fam.f1(Y))
        defect = fam.f1(schouten_bracket(X, Y)) - gerst_bracket(fam.f1(X), fam.f1(Y))
        bracket_homotopy = defect == hochschild_d(fam.f2(X, Y))
        reports.append({
            'antisymmetry': antisymmetry,
            'chain_map': chain_map,
            'bracket_homotopy': bracket_homotopy,
        })
    passed = all(all(r.values()) for r in reports)
    return {'passed': passed, 'samples': reports}
