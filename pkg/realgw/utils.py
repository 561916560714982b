# -*- coding: utf-8 -*-
"""
Some small helper functions
"""


class PreconditionError(ValueError):
    """Raised when a stated hypothesis of an operation does not hold.
    The name of the violated hypothesis is kept in ``precondition``.
    """

    def __init__(self, precondition, message=None):
        self.precondition = precondition
        super(PreconditionError, self).__init__(message or precondition)


def get_type(obj):
    return type(obj).__name__


def check_int(value, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError('{0} must be an integer, not {1}'.format(name, get_type(value)))
    return value


def parity(value):
    """Return value mod 2 as 0 or 1 (also for negative integers)"""
    return value % 2


def binom2(value):
    """C(value, 2) = value(value-1)/2, defined for every integer"""
    return value * (value - 1) // 2


def parse_range(text):
    """Parse '1..N' (inclusive) or a single integer into a range
    :param text: range string
    :return: range object
    :raise ValueError: when text is not of the form a..b, or b < a
    """
    if '..' in text:
        start, _, stop = text.partition('..')
        start, stop = int(start), int(stop)
        if stop < start:
            raise ValueError('empty range: {0}'.format(text))
        return range(start, stop + 1)
    return range(int(text), int(text) + 1)
