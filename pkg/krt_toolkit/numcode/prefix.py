# -*- coding: utf-8 -*-

"""
Self-delimiting bit strings for natural numbers.

A number ``n`` is written as the Elias delta code of ``n + 1``:
the binary length ``L`` of ``n + 1`` in Elias gamma form,
followed by the binary digits of ``n + 1`` without the leading one.
Concatenations of such codes can be parsed left to right,
and their length is ``bitlen(n) + O(log bitlen(n))``.
"""

from typing import Tuple


def encode_delta(number: int) -> str:
    """
    Returns the self-delimiting code of a natural number.

    >>> encode_delta(0), encode_delta(1), encode_delta(2)
    ('1', '0100', '0101')

    """
    if number < 0:
        raise ValueError('Natural number expected, got: {0}'.format(number))
    shifted = number + 1
    length = shifted.bit_length()
    gamma = '0' * (length.bit_length() - 1) + format(length, 'b')
    return gamma + format(shifted, 'b')[1:]


def decode_delta(bits: str, position: int) -> Tuple[int, int]:
    """
    Reads one code from ``bits`` starting at ``position``.

    Returns the decoded number and the position after the code.

    >>> decode_delta('01001', 0)
    (1, 4)

    Raises:
        ValueError: when the bits end in the middle of a code.

    """
    marker = bits.find('1', position)
    if marker < 0:
        raise ValueError('Truncated code at position {0}'.format(position))
    zeros = marker - position
    gamma_end = marker + zeros + 1
    if gamma_end > len(bits):
        raise ValueError('Truncated code at position {0}'.format(position))
    length = int(bits[marker:gamma_end], 2)
    body_end = gamma_end + length - 1
    if body_end > len(bits):
        raise ValueError('Truncated code at position {0}'.format(position))
    return int('1' + bits[gamma_end:body_end], 2) - 1, body_end
