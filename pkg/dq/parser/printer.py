''' 
Date: 2026-09-21 16:10:42
LastEditTime: 2026-10-13 12:09:18
Description: 
    Canonical text of library values, in the same grammar the expression parser reads.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

from dq.algebra.scalar_series import HbarSeries


def to_text(value):
    if isinstance(value, HbarSeries):
        return series_text(value)
    return str(value)


def series_text(series):
    """ 'k: expr; k: expr' over the nonzero coefficients, or '0' for the zero series. """
    pieces = [f"{k}: {c}" for k, c in enumerate(series) if c]
    return '; '.join(pieces) if pieces else '0'
