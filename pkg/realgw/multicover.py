# -*- coding: utf-8 -*-
"""
Multiple-cover transform between real GW invariants and integer curve counts.

    GW_g = sum_{0<=h<=g, g-h even} C~_h((g-h)/2) E_h,
    sum_g C~_h(g) t^{2g} = (f(t/2)/(t/2))^{h-1+c1B/2},  f = sinh or sin.

The system is unitriangular with unit diagonal and couples only genera of
the same parity, so it is solved as two independent towers.
"""
import logging
from collections.abc import Mapping
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .series import (
    PowerSeries,
    format_rational,
    series_sin_over_halft,
    series_sinh_over_halft,
    to_rational,
)
from .utils import PreconditionError, check_int, get_type

logger = logging.getLogger(__name__)


class TransformConvention(Enum):
    SINH = 'sinh'
    SIN = 'sin'

    @classmethod
    def parse(cls, value):
        """Accept a TransformConvention or its name ('sinh' / 'sin')
        :raise ValueError: for anything else
        """
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError('unsupport transform convention: ' + str(value))

    @classmethod
    def for_orientation(cls, has_conjugation):
        """sinh when the orienting line bundle lifts the involution by a conjugation
        (canonically oriented moduli), sin otherwise (projection oriented moduli)
        """
        return cls.SINH if has_conjugation else cls.SIN

    def base_series(self, order=None):
        if self is TransformConvention.SINH:
            return series_sinh_over_halft(order)
        return series_sin_over_halft(order)


def convention_for_orientation(has_conjugation):
    return TransformConvention.for_orientation(has_conjugation)


def _check_c1b(c1B):
    check_int(c1B, 'c1B')
    if c1B % 2:
        raise PreconditionError('c1B even', '<c1(X), B> must be even, got {0}'.format(c1B))
    return c1B


def _check_genus(genus, name='genus'):
    check_int(genus, name)
    if genus < 0:
        raise ValueError('{0} should be nonnegative, got {1}'.format(name, genus))
    return genus


class InvariantVector(Mapping):
    """
    Rational invariants indexed by genus 0..max_genus for one class B.
    Genera above max_genus are absent rather than zero; a genus at or below
    max_genus that has no entry reads as zero through value().
    """

    def __init__(self, entries, c1B, max_genus=None):
        """
        :param entries: mapping (or pairs) genus -> int / Fraction / "p/q"; genus keys may be
            decimal strings as they come out of JSON
        :param c1B: even integer <c1(X, omega), B>
        :param max_genus: G, defaults to the largest genus present (0 when empty)
        """
        self.c1B = _check_c1b(c1B)
        items = entries.items() if isinstance(entries, Mapping) else entries
        self._entries = {}
        for genus, value in items:
            if isinstance(genus, str):
                genus = int(genus)
            self._entries[_check_genus(genus)] = to_rational(value)
        if max_genus is None:
            max_genus = max(self._entries) if self._entries else 0
        self.max_genus = _check_genus(max_genus, 'max_genus')
        for genus in self._entries:
            if genus > self.max_genus:
                raise ValueError('genus {0} exceeds max_genus {1}'.format(genus, self.max_genus))

    def __getitem__(self, genus):
        """Return the stored entry at genus
        :raise KeyError: when genus has no entry
        """
        if genus not in self._entries:
            raise KeyError(str(genus))
        return self._entries[genus]

    def __iter__(self):
        return iter(sorted(self._entries))

    def __len__(self):
        return len(self._entries)

    def value(self, genus):
        """Entry at genus, zero when missing
        :raise KeyError: when genus is above max_genus
        """
        if genus > self.max_genus:
            raise KeyError(str(genus))
        return self._entries.get(genus, Fraction(0))

    def dense(self):
        return [self.value(g) for g in range(self.max_genus + 1)]

    def __eq__(self, other):
        if isinstance(other, InvariantVector):
            return (self.c1B, self.max_genus, self.dense()) == (other.c1B, other.max_genus, other.dense())
        return super(InvariantVector, self).__eq__(other)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'InvariantVector({0!r}, c1B={1}, max_genus={2})'.format(
            {g: format_rational(v) for g, v in self.items()}, self.c1B, self.max_genus)

    def __str__(self):
        body = ', '.join('{0}: {1}'.format(g, format_rational(v)) for g, v in self.items())
        return 'InvariantVector c1B={0}, {{{1}}}, max genus {2}'.format(self.c1B, body, self.max_genus)

    def entries_json(self):
        return {str(g): format_rational(v) for g, v in self.items()}

    def to_json(self):
        return {'c1B': self.c1B, 'max_genus': self.max_genus, 'entries': self.entries_json()}

    @classmethod
    def from_json(cls, doc, key='entries'):
        """Build from {"c1B": int, "max_genus": G, <key>: {"h": "p/q"}}"""
        if not isinstance(doc, Mapping):
            raise TypeError('invariant vector document must be an object, not ' + get_type(doc))
        return cls(doc[key], doc['c1B'], doc.get('max_genus'))


_RATIONAL_PATTERN = r'^[-+]?\d+(/\d+)?$'

INVARIANTS_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'InvariantVector',
    'type': 'object',
    'required': ['c1B', 'entries'],
    'properties': {
        'c1B': {'type': 'integer', 'multipleOf': 2},
        'max_genus': {'type': 'integer', 'minimum': 0},
        'convention': {'enum': [c.value for c in TransformConvention]},
        'entries': {
            'type': 'object',
            'propertyNames': {'pattern': r'^\d+$'},
            'additionalProperties': {'type': 'string', 'pattern': _RATIONAL_PATTERN},
        },
    },
}


def transform_exponent(h, c1B):
    """h - 1 + c1B/2, the power of the base series; may be negative"""
    return _check_genus(h, 'h') - 1 + _check_c1b(c1B) // 2


@lru_cache(maxsize=None)
def _transform_series(convention, exponent, order):
    logger.debug('building %s series to power %d through t^%d', convention.value, exponent, order)
    return convention.base_series(order) ** exponent


def multicover_coefficient(h, c1B, g, conv=TransformConvention.SINH):
    """The t^{2g} coefficient of (f(t/2)/(t/2))^{h-1+c1B/2}
    :param h: curve genus, >= 0
    :param c1B: even integer
    :param g: half the genus gap, >= 0
    :param conv: TransformConvention or 'sinh' / 'sin'
    :return: Fraction
    :raise PreconditionError: when t^{2g} is beyond the truncation order
    """
    conv = TransformConvention.parse(conv)
    exponent = transform_exponent(h, c1B)
    _check_genus(g, 'g')
    order = PowerSeries.default_order()
    if 2 * g > order:
        raise PreconditionError('genus within truncation order',
                                't^{0} is beyond truncation order {1}'.format(2 * g, order))
    return _transform_series(conv, exponent, order)[2 * g]


def _check_max_genus(vector):
    order = PowerSeries.default_order()
    if vector.max_genus > order:
        raise PreconditionError('genus within truncation order',
                                'max_genus {0} exceeds truncation order {1}'.format(vector.max_genus, order))


def forward_transform(E, conv=TransformConvention.SINH):
    """GW_g = sum over h <= g, g - h even, of C~_h((g-h)/2) E_h for g <= G
    :param E: InvariantVector of curve counts
    :param conv: TransformConvention
    :return: InvariantVector of GW invariants, same c1B and max_genus
    """
    conv = TransformConvention.parse(conv)
    _check_max_genus(E)
    gw = {}
    for g in range(E.max_genus + 1):
        total = Fraction(0)
        for h in range(g % 2, g + 1, 2):
            value = E.value(h)
            if value:
                total += multicover_coefficient(h, E.c1B, (g - h) // 2, conv) * value
        gw[g] = total
    return InvariantVector(gw, E.c1B, E.max_genus)


def invert_transform(GW, conv=TransformConvention.SINH):
    """Solve forward_transform(E) = GW for E by back-substitution,
    the even and the odd genera as two separate towers
    :param GW: InvariantVector of GW invariants
    :param conv: TransformConvention
    :return: InvariantVector of E, same c1B and max_genus
    """
    conv = TransformConvention.parse(conv)
    _check_max_genus(GW)
    E = {}
    for tower in (0, 1):
        for g in range(tower, GW.max_genus + 1, 2):
            residual = GW.value(g)
            for h in range(tower, g, 2):
                if E[h]:
                    residual -= multicover_coefficient(h, GW.c1B, (g - h) // 2, conv) * E[h]
            E[g] = residual
        logger.debug('solved %s tower of parity %d up to genus %d', conv.value, tower, GW.max_genus)
    return InvariantVector(E, GW.c1B, GW.max_genus)


def integrality_check(E):
    """Return every (genus, value) whose value is not an integer"""
    return [(genus, value) for genus, value in E.items() if value.denominator != 1]
