# -*- coding: utf-8 -*-

"""
Showing numbers that may be codes of a hundred thousand bits.

Decimal conversion of such numbers is quadratic and recent interpreters
refuse it beyond a configurable number of digits.
Detail lines shorten wide numbers to their leading hex digits,
the command line lifts the limit before it prints full codes.
"""

import sys
from typing import Any

import attr
from typing_extensions import Final

from krt_toolkit.numcode.pairing import bitlen

#: Numbers up to this bit length are shown in full.
SHORT_BITS: Final = 128

#: Leading bits kept when a wide number is shortened.
_HEAD_BITS: Final = 32


def short_number(number: int) -> str:
    """
    Decimal for ordinary numbers, leading hex digits for wide ones.

    >>> short_number(42)
    '42'
    >>> short_number(0xDEADBEEF << 200)
    '0xdeadbeef…<232 bits>'

    """
    if number < 0 or bitlen(number) <= SHORT_BITS:
        return str(number)
    width = bitlen(number)
    head = number >> (width - _HEAD_BITS)
    return '0x{0:x}…<{1} bits>'.format(head, width)


def short_text(argument: Any) -> str:
    """
    Like :func:`str`, with every number inside shortened.

    Tuples, lists and ``attrs`` records are shown field by field.

    >>> short_text((1, [2 << 130]))
    '(1, [0x80000000…<132 bits>])'

    """
    if isinstance(argument, bool):
        return str(argument)
    if isinstance(argument, int):
        return short_number(argument)
    if isinstance(argument, tuple):
        return '({0})'.format(', '.join(map(short_text, argument)))
    if isinstance(argument, list):
        return '[{0}]'.format(', '.join(map(short_text, argument)))
    if attr.has(type(argument)):
        return '{0}({1})'.format(type(argument).__name__, ', '.join(
            '{0}={1}'.format(field.name, short_text(
                getattr(argument, field.name),
            ))
            for field in attr.fields(type(argument))
        ))
    return str(argument)


def lift_digit_limit() -> None:
    """Allows decimal conversion of numbers of any length."""
    setter = getattr(sys, 'set_int_max_str_digits', None)
    if setter is not None:
        setter(0)
