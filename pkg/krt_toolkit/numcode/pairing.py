# -*- coding: utf-8 -*-

"""
Bit interleaving pairing and the tuples built from it.

``pair(x, y)`` alternates the binary digits of ``x`` and ``y``
starting on the right with the least significant digit of ``y``.
So ``y`` owns the even bit positions and ``x`` owns the odd ones.

Integers that fit into 32 bits are spread with the usual magic masks.
Wider integers are converted to bytes and spread with lookup tables,
which keeps the coding linear in the bit length of the arguments.
"""

from typing import List, Sequence, Tuple

import numpy as np
from typing_extensions import Final

#: Arguments below this bound use the pure integer fast path.
_SMALL_LIMIT: Final = 1 << 32

#: Paired values below this bound use the pure integer fast path.
_SMALL_PAIRED_LIMIT: Final = 1 << 64

_EVEN_BITS: Final = 0x5555  # noqa: WPS432


def _spread(number: int) -> int:
    number &= 0xFFFFFFFF  # noqa: WPS432
    number = (number | (number << 16)) & 0x0000FFFF0000FFFF  # noqa: WPS432
    number = (number | (number << 8)) & 0x00FF00FF00FF00FF  # noqa: WPS432
    number = (number | (number << 4)) & 0x0F0F0F0F0F0F0F0F  # noqa: WPS432
    number = (number | (number << 2)) & 0x3333333333333333  # noqa: WPS432
    return (number | (number << 1)) & 0x5555555555555555  # noqa: WPS432


def _compact(number: int) -> int:
    number &= 0x5555555555555555  # noqa: WPS432
    number = (number ^ (number >> 1)) & 0x3333333333333333  # noqa: WPS432
    number = (number ^ (number >> 2)) & 0x0F0F0F0F0F0F0F0F  # noqa: WPS432
    number = (number ^ (number >> 4)) & 0x00FF00FF00FF00FF  # noqa: WPS432
    number = (number ^ (number >> 8)) & 0x0000FFFF0000FFFF  # noqa: WPS432
    return (number ^ (number >> 16)) & 0x00000000FFFFFFFF  # noqa: WPS432


#: Every byte spread onto the even bits of a 16 bit word.
_SPREAD_LOW: Final = np.array(
    [_spread(byte) for byte in range(256)], dtype=np.uint16,
)

#: Every byte spread onto the odd bits of a 16 bit word.
_SPREAD_HIGH: Final = np.array(
    [_spread(byte) << 1 for byte in range(256)], dtype=np.uint16,
)

_COMPACT_WORD: Final = np.zeros(1 << 16, dtype=np.uint8)
_COMPACT_WORD[_SPREAD_LOW] = np.arange(256, dtype=np.uint8)


def _check_natural(number: int) -> None:
    if number < 0:
        raise ValueError('Natural number expected, got: {0}'.format(number))


def _byte_width(number: int) -> int:
    return max((number.bit_length() + 7) // 8, 1)


def _wide_pair(first: int, second: int) -> int:
    width = max(_byte_width(first), _byte_width(second))
    first_bytes = np.frombuffer(first.to_bytes(width, 'little'), np.uint8)
    second_bytes = np.frombuffer(second.to_bytes(width, 'little'), np.uint8)
    words = _SPREAD_HIGH[first_bytes] | _SPREAD_LOW[second_bytes]
    return int.from_bytes(words.astype('<u2').tobytes(), 'little')


def _wide_unpair(paired: int) -> Tuple[int, int]:
    width = (paired.bit_length() + 15) // 16 * 2
    words = np.frombuffer(paired.to_bytes(width, 'little'), '<u2')
    second = _COMPACT_WORD[words & _EVEN_BITS]
    first = _COMPACT_WORD[(words >> 1) & _EVEN_BITS]
    return (
        int.from_bytes(first.tobytes(), 'little'),
        int.from_bytes(second.tobytes(), 'little'),
    )


def pair(first: int, second: int) -> int:
    """
    Interleaves the binary digits of two natural numbers.

    >>> bin(pair(15, 2))
    '0b10101110'

    >>> pair(1, 0), pair(0, 1)
    (2, 1)

    """
    _check_natural(first)
    _check_natural(second)
    if first < _SMALL_LIMIT and second < _SMALL_LIMIT:
        return (_spread(first) << 1) | _spread(second)
    return _wide_pair(first, second)


def unpair(paired: int) -> Tuple[int, int]:
    """
    Inverts :func:`pair`.

    >>> unpair(0b10101110)
    (15, 2)

    """
    _check_natural(paired)
    if paired < _SMALL_PAIRED_LIMIT:
        return _compact(paired >> 1), _compact(paired)
    return _wide_unpair(paired)


def tuple_encode(elements: Sequence[int], arity: int) -> int:
    """
    Codes ``arity`` numbers as ``⟨x1, ⟨x2, …⟨x(n-1), xn⟩…⟩⟩``.

    Raises:
        ValueError: when arity is below two or does not match.

    """
    if arity < 2 or len(elements) != arity:
        raise ValueError(
            'Can not code {0} elements as a tuple of arity {1}'.format(
                len(elements), arity,
            ),
        )
    encoded = elements[-1]
    for element in reversed(elements[:-1]):
        encoded = pair(element, encoded)
    return encoded


def tuple_decode(encoded: int, arity: int) -> List[int]:
    """
    Inverts :func:`tuple_encode` for the same ``arity``.

    >>> tuple_decode(tuple_encode([1, 2, 3], 3), 3)
    [1, 2, 3]

    """
    if arity < 2:
        raise ValueError('Tuple arity must be at least 2, got: {0}'.format(
            arity,
        ))
    elements = []
    for _ in range(arity - 1):
        head, encoded = unpair(encoded)
        elements.append(head)
    elements.append(encoded)
    return elements


def bitlen(number: int) -> int:
    """
    Length of a number written in binary, a single zero has length one.

    >>> bitlen(0), bitlen(1), bitlen(4)
    (1, 1, 3)

    """
    _check_natural(number)
    return max(number.bit_length(), 1)
