# -*- coding: utf-8 -*-
"""
Exact rational arithmetic and truncated power series in one variable t.

Rationals are ``fractions.Fraction`` values, always stored reduced with a
positive denominator. A ``PowerSeries`` knows its coefficients through t^N
and nothing beyond; arithmetic between series of different orders keeps
the smaller order.
"""
import logging
import operator
import os
import re
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .utils import PreconditionError, check_int, get_type

logger = logging.getLogger(__name__)

Rational = Fraction

ADD, SUB, MUL, DIV = 'add', 'sub', 'mul', 'div'
_OPERATORS = {
    ADD: operator.add,
    SUB: operator.sub,
    MUL: operator.mul,
    DIV: operator.truediv,
}

_RATIONAL_LITERAL = re.compile(r'^\s*[-+]?\d+(/\d+)?\s*$')


def parse_rational(text):
    """Parse the wire form "p/q" (or "p") into a Rational
    :param text: string
    :return: Fraction
    :raise ValueError: when text is not an integer or integer fraction
    :raise ZeroDivisionError: when q is zero
    """
    if not isinstance(text, str):
        raise TypeError('rational literal must be str, not ' + get_type(text))
    if not _RATIONAL_LITERAL.match(text):
        raise ValueError('invalid rational literal: {0!r}'.format(text))
    return Fraction(text.strip())


def format_rational(value):
    """Return "p/q", or "p" when q = 1"""
    return str(to_rational(value))


def to_rational(value):
    """Coerce an int, Fraction or "p/q" string to a Rational; floats are refused"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('cannot convert bool to Rational')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError('cannot convert {0} to Rational'.format(get_type(value)))


def rational_arith(a, b, op):
    """Exact a <op> b for op in add/sub/mul/div
    :param a: Rational
    :param b: Rational
    :param op: one of 'add', 'sub', 'mul', 'div'
    :return: reduced Rational
    :raise ZeroDivisionError: when op is div and b is zero
    :raise ValueError: for an unknown op
    """
    if op not in _OPERATORS:
        raise ValueError('unsupport rational operation: ' + str(op))
    a, b = to_rational(a), to_rational(b)
    if op == DIV and b == 0:
        raise ZeroDivisionError('rational division by zero: {0} / 0'.format(a))
    return _OPERATORS[op](a, b)


class PowerSeries(Sequence):
    """
    Truncated power series sum_{i<=N} c_i t^i with Rational coefficients.
    Supports the read-only sequence protocol over its N+1 coefficients.
    """
    __slots__ = ('_coefficients',)

    _FALLBACK_ORDER = 40
    _DEFAULT_ORDER = None
    _STR_SUMMARY_LIMIT = 10

    @classmethod
    def default_order(cls):
        """Truncation order used when none is given.
        Read once from REALGW_ORDER, 40 when the variable is unset.
        """
        if PowerSeries._DEFAULT_ORDER is None:
            raw = os.environ.get('REALGW_ORDER')
            if raw is None:
                order = cls._FALLBACK_ORDER
            else:
                try:
                    order = int(raw)
                except ValueError:
                    raise ValueError('REALGW_ORDER must be an integer, got {0!r}'.format(raw))
            cls.set_default_order(order)
        return PowerSeries._DEFAULT_ORDER

    @classmethod
    def set_default_order(cls, order):
        check_int(order, 'order')
        if order < 0:
            raise ValueError('truncation order should be nonnegative')
        PowerSeries._DEFAULT_ORDER = order

    @classmethod
    def reset_default_order(cls):
        """Forget the configured order so REALGW_ORDER is read again"""
        PowerSeries._DEFAULT_ORDER = None

    @classmethod
    def set_str_summary_limit(cls, limit):
        if limit <= 3:
            raise ValueError('str summary limit should greater than 3')
        PowerSeries._STR_SUMMARY_LIMIT = limit

    @classmethod
    def str_summary_limit(cls):
        return PowerSeries._STR_SUMMARY_LIMIT

    @classmethod
    def resolve_order(cls, order):
        if order is None:
            return cls.default_order()
        check_int(order, 'order')
        if order < 0:
            raise ValueError('truncation order should be nonnegative')
        return order

    def __init__(self, coefficients, order=None):
        """Build a series from its leading coefficients
        :param coefficients: iterable of int, Fraction or "p/q"
        :param order: truncation order N; missing coefficients up to t^N are zero,
            extra ones are dropped. Defaults to len(coefficients) - 1.
        """
        coefficients = [to_rational(c) for c in coefficients]
        if order is None:
            if not coefficients:
                raise ValueError('PowerSeries needs a coefficient or an explicit order')
            order = len(coefficients) - 1
        order = self.resolve_order(order)
        if len(coefficients) > order + 1:
            del coefficients[order + 1:]
        else:
            coefficients.extend([Fraction(0)] * (order + 1 - len(coefficients)))
        self._coefficients = tuple(coefficients)

    @classmethod
    def constant(cls, value, order=None):
        return cls([value], cls.resolve_order(order))

    @classmethod
    def one(cls, order=None):
        return cls.constant(1, order)

    @property
    def order(self):
        return len(self._coefficients) - 1

    @property
    def coefficients(self):
        return self._coefficients

    def __len__(self):
        return len(self._coefficients)

    def _check_index(self, item):
        if isinstance(item, bool) or not isinstance(item, int):
            raise TypeError('series indices must be integers, not ' + get_type(item))
        if item < 0:
            raise IndexError('series index out of range')
        if item > self.order:
            raise IndexError('coefficient of t^{0} is beyond truncation order {1}'.format(item, self.order))

    def __getitem__(self, key):
        """For calling with self[key]
        :param key: index or slice
        :return: coefficient or list of coefficients
        """
        if isinstance(key, slice):
            return list(self._coefficients[key])
        self._check_index(key)
        return self._coefficients[key]

    def coefficient(self, index):
        return self[index]

    def __iter__(self):
        return iter(self._coefficients)

    def __eq__(self, other):
        """Coefficient-wise equality through the smaller truncation order"""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return self._coefficients[:n + 1] == other.coefficients[:n + 1]

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    # equality is truncated, hence not transitive
    __hash__ = None

    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PowerSeries.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self._coefficients[:n + 1], other.coefficients)], n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self._coefficients], self.order)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        """Cauchy product (or scalar multiple), truncated at the smaller order"""
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PowerSeries([c * other for c in self._coefficients], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coefficients, other.coefficients
        product = []
        for i in range(n + 1):
            total = Fraction(0)
            for j in range(i + 1):
                if a[j] and b[i - j]:
                    total += a[j] * b[i - j]
            product.append(total)
        return PowerSeries(product, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError('series division by zero')
            return self * (1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.reciprocal() * other
        return NotImplemented

    def is_unit(self):
        return self._coefficients[0] != 0

    def reciprocal(self):
        """Return s^{-1} with s * s^{-1} = 1 through t^N
        :raise PreconditionError: when the constant term is zero
        """
        if not self.is_unit():
            raise PreconditionError('unit constant term',
                                    'reciprocal requires a nonzero constant term')
        a = self._coefficients
        inverse = 1 / a[0]
        result = [inverse]
        for i in range(1, self.order + 1):
            total = Fraction(0)
            for j in range(1, i + 1):
                if a[j]:
                    total += a[j] * result[i - j]
            result.append(-total * inverse)
        return PowerSeries(result, self.order)

    def __pow__(self, exponent):
        """Integer power; negative exponents go through the reciprocal
        :param exponent: int
        :raise PreconditionError: negative exponent of a non-unit series
        """
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.reciprocal()
            exponent = -exponent
        result = PowerSeries.one(self.order)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def truncate(self, order):
        """Return the same series known only through t^order
        :raise ValueError: when order exceeds the current one
        """
        check_int(order, 'order')
        if order < 0 or order > self.order:
            raise ValueError('cannot truncate order {0} series at {1}'.format(self.order, order))
        return PowerSeries(self._coefficients[:order + 1], order)

    def __repr__(self):
        return 'PowerSeries([{0}], order={1})'.format(
            ', '.join(format_rational(c) for c in self._coefficients), self.order)

    def __str__(self):
        """Return a summary string like 1 + 1/24*t^2 + ... + O(t^N+1)"""
        terms = []
        for i, c in enumerate(self._coefficients):
            if not c:
                continue
            if len(terms) >= PowerSeries.str_summary_limit():
                terms.append('...')
                break
            if i == 0:
                terms.append(format_rational(c))
            else:
                power = 't' if i == 1 else 't^{0}'.format(i)
                terms.append(power if c == 1 else '{0}*{1}'.format(format_rational(c), power))
        terms.append('O(t^{0})'.format(self.order + 1))
        return ' + '.join(terms)

    def to_json(self):
        return {
            'order': self.order,
            'coefficients': [format_rational(c) for c in self._coefficients],
        }

    @classmethod
    def from_json(cls, doc):
        """Inverse of to_json
        :raise ValueError: when the coefficient list does not have order + 1 entries
        """
        coefficients, order = doc['coefficients'], doc['order']
        if len(coefficients) != order + 1:
            raise ValueError('series with order {0} needs {1} coefficients, got {2}'.format(
                order, order + 1, len(coefficients)))
        return cls(coefficients, order)


def series_mul(s, other):
    return s * other


def series_reciprocal(s):
    return s.reciprocal()


def series_pow(s, exponent):
    check_int(exponent, 'exponent')
    return s ** exponent


@lru_cache(maxsize=None)
def _halft_series(alternating, order):
    logger.debug('expanding %s(t/2)/(t/2) through t^%d', 'sin' if alternating else 'sinh', order)
    coefficients = []
    for i in range(order + 1):
        if i % 2:
            coefficients.append(0)
            continue
        j = i // 2
        value = Fraction(1, 4 ** j * factorial(2 * j + 1))
        coefficients.append(-value if alternating and j % 2 else value)
    return PowerSeries(coefficients, order)


def series_sinh_over_halft(order=None):
    """sinh(t/2)/(t/2) = sum_j (t/2)^{2j}/(2j+1)! through t^order"""
    return _halft_series(False, PowerSeries.resolve_order(order))


def series_sin_over_halft(order=None):
    """sin(t/2)/(t/2); the t^{2j} coefficient is (-1)^j times the sinh one"""
    return _halft_series(True, PowerSeries.resolve_order(order))
