''' 
Date: 2026-09-02 10:12:40
LastEditTime: 2026-10-12 16:25:47
Description: 
    Exact scalars (Gaussian rationals) and truncated formal power series in hbar.

    Copyright (c) 2026 DQ Team

    This work is licensed under the terms of the MIT license.
    For a copy, see <https://opensource.org/licenses/MIT>
'''

import numbers
import operator
from fractions import Fraction

from dq.util.errors import NonInvertibleSeriesError, UsageError


class GaussianRational:
    """
        Immutable element re + i*im of Q(i). Both parts are Fractions, so arithmetic never rounds.
    """
    __slots__ = ('_re', '_im')

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    def is_real(self):
        return self._im == 0

    def conjugate(self):
        return GaussianRational(self._re, -self._im)

    def __add__(self, other):
        if not is_scalar(other):
            return NotImplemented
        other = as_scalar(other)
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return as_scalar(other) - self

    def __mul__(self, other):
        if not is_scalar(other):
            return NotImplemented
        other = as_scalar(other)
        return GaussianRational(
            self._re * other._re - self._im * other._im,
            self._re * other._im + self._im * other._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        other = as_scalar(other)
        norm = other._re * other._re + other._im * other._im
        if norm == 0:
            raise ZeroDivisionError('division by the zero Gaussian rational')
        num = self * other.conjugate()
        return GaussianRational(num._re / norm, num._im / norm)

    def __rtruediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return as_scalar(other) / self

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self):
        return self._re != 0 or self._im != 0

    def __eq__(self, other):
        if not is_scalar(other):
            return NotImplemented
        other = as_scalar(other)
        return self._re == other._re and self._im == other._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self):
        return f"GaussianRational({str(self._re)!r}, {str(self._im)!r})"

    def __str__(self):
        if self._im == 0:
            return str(self._re)
        if self._im == 1:
            imag = 'i'
        elif self._im == -1:
            imag = '-i'
        else:
            imag = f"{self._im}*i"
        if self._re == 0:
            return imag
        if imag.startswith('-'):
            return f"({self._re} - {imag[1:]})"
        return f"({self._re} + {imag})"


def is_scalar(value):
    return isinstance(value, (GaussianRational, numbers.Rational))


def as_scalar(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, numbers.Rational):
        return GaussianRational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _zero_like(value):
    return value * 0


class HbarSeries:
    """
        Truncated formal power series a_0 + a_1 h + ... + a_N h^N.

        The coefficients may live in any space closed under addition and multiplication by
        integers (scalars, polynomials, multivectors, operators). The truncation order N is
        fixed at construction; operands of binary operations must agree on it.
    """
    __slots__ = ('_coeffs',)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) == 0:
            raise UsageError('a series needs at least its order-0 coefficient')
        self._coeffs = coeffs

    @classmethod
    def constant(cls, value, order):
        zero = _zero_like(value)
        return cls([value] + [zero] * order)

    @classmethod
    def zeros(cls, zero, order):
        return cls([zero] * (order + 1))

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, k):
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def _check_order(self, other):
        if not isinstance(other, HbarSeries):
            raise TypeError(f"expected HbarSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise UsageError(f"truncation order mismatch: {self.order} vs {other.order}")

    def truncate(self, order):
        if order > self.order:
            raise UsageError(f"cannot raise truncation order {self.order} to {order}")
        return HbarSeries(self._coeffs[:order + 1])

    def with_coeff(self, k, value):
        coeffs = list(self._coeffs)
        coeffs[k] = value
        return HbarSeries(coeffs)

    def map(self, fn):
        return HbarSeries(fn(c) for c in self._coeffs)

    def shift(self, k=1):
        """ Multiply by h^k, dropping the coefficients pushed past the truncation order. """
        zero = _zero_like(self._coeffs[0])
        kept = self._coeffs[:max(self.order + 1 - k, 0)]
        return HbarSeries(([zero] * k + list(kept))[:self.order + 1])

    def unshift(self, k=1):
        """ Divide by h^k; the k lowest coefficients must vanish and the order drops by k. """
        if any(self._coeffs[:k]):
            raise UsageError(f"series is not divisible by h^{k}")
        if k > self.order:
            raise UsageError(f"cannot divide an order-{self.order} series by h^{k}")
        return HbarSeries(self._coeffs[k:])

    def scale(self, c):
        return HbarSeries(c * a for a in self._coeffs)

    def __add__(self, other):
        if not isinstance(other, HbarSeries):
            return NotImplemented
        self._check_order(other)
        return HbarSeries(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other):
        if not isinstance(other, HbarSeries):
            return NotImplemented
        self._check_order(other)
        return HbarSeries(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self):
        return HbarSeries(-a for a in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, HbarSeries):
            return self.mul(other)
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def mul(self, other, product=operator.mul):
        """ Cauchy product c_n = sum_k product(a_k, b_{n-k}), truncated at the common order. """
        self._check_order(other)
        a, b = self._coeffs, other._coeffs
        out = []
        for n in range(self.order + 1):
            acc = product(a[0], b[n])
            for k in range(1, n + 1):
                acc = acc + product(a[k], b[n - k])
            out.append(acc)
        return HbarSeries(out)

    def inverse(self, product=operator.mul, inverse0=None):
        """
            Solve a * b = 1 order by order: b_0 = a_0^{-1}, b_n = -b_0 * sum_{k>=1} a_k b_{n-k}.
            `inverse0` inverts the constant coefficient; for scalars it is 1/a_0.
        """
        a = self._coeffs
        if inverse0 is None:
            if not a[0]:
                raise NonInvertibleSeriesError('constant term of the series is zero')
            b0 = Fraction(1) / a[0]
        else:
            b0 = inverse0(a[0])
        b = [b0]
        for n in range(1, self.order + 1):
            acc = product(a[1], b[n - 1])
            for k in range(2, n + 1):
                acc = acc + product(a[k], b[n - k])
            b.append(-product(b0, acc))
        return HbarSeries(b)

    def is_zero(self):
        return not any(self._coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, HbarSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"HbarSeries({list(self._coeffs)!r})"


def _retruncated(a, b, retruncate):
    if retruncate and a.order != b.order:
        order = min(a.order, b.order)
        return a.truncate(order), b.truncate(order)
    return a, b


def series_add(a, b, retruncate=False):
    a, b = _retruncated(a, b, retruncate)
    return a + b


def series_sub(a, b, retruncate=False):
    a, b = _retruncated(a, b, retruncate)
    return a - b


def series_mul(a, b, product=operator.mul, retruncate=False):
    a, b = _retruncated(a, b, retruncate)
    return a.mul(b, product=product)


def series_invert(a):
    return a.inverse()
