''' 
Date: 2026-09-05 09:02:51
LastEditTime: 2026-10-09 14:18:30
Description: 
    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''


class BaseDGLA:
    """
        Template of a differential graded Lie algebra acting on concrete elements.
        Degrees are the shifted ones, so the sign rules are those of a plain graded Lie algebra.
    """
    name = 'base'

    def __init__(self, dim):
        self.dim = dim

    def degree(self, element):
        raise NotImplementedError()

    def bracket(self, a, b):
        raise NotImplementedError()

    def differential(self, a):
        raise NotImplementedError()

    def zero(self, degree):
        raise NotImplementedError()

    def series_bracket(self, a, b):
        return a.mul(b, product=self.bracket)

    def series_differential(self, a):
        return a.map(self.differential)

    def leibniz_defect(self, a, b):
        """ d[a,b] - [da,b] - (-1)^|a| [a,db], which vanishes in any DGLA. """
        sign = -1 if self.degree(a) % 2 else 1
        lhs = self.differential(self.bracket(a, b))
        return lhs - self.bracket(self.differential(a), b) - sign * self.bracket(a, self.differential(b))
