# -*- coding: utf-8 -*-

"""
Base-two numerals written as arithmetic terms.

Zero is ``0``. The leading binary digit gives ``S(0)``,
every further digit doubles the term with ``(S(S(0))*t)``,
and a ``1`` digit adds an ``S(…)`` around the doubled term.
So the length of a numeral is linear in the bit length of its value.

Both directions work with explicit stacks, there is no recursion.
"""

from typing import List, Tuple

from typing_extensions import Final

_ZERO: Final = '0'
_SUCCESSOR: Final = 'S('
_DOUBLE: Final = '(S(S(0))*'
_CLOSE: Final = ')'


def render_numeral(number: int) -> str:
    """
    Writes the canonical numeral of a natural number.

    >>> render_numeral(0), render_numeral(1)
    ('0', 'S(0)')

    >>> render_numeral(2)
    '(S(S(0))*S(0))'

    >>> render_numeral(3)
    'S((S(S(0))*S(0)))'

    """
    if number < 0:
        raise ValueError('Numerals are natural, got: {0}'.format(number))
    if number == 0:
        return _ZERO
    prefixes: List[str] = []
    for digit in format(number, 'b')[1:]:
        prefixes.append(_DOUBLE)
        if digit == '1':
            prefixes.append(_SUCCESSOR)
    prefixes.reverse()
    return ''.join((
        *prefixes,
        _SUCCESSOR,
        _ZERO,
        _CLOSE * (len(prefixes) + 1),
    ))


def parse_numeral(text: str, position: int = 0) -> Tuple[int, int]:
    """
    Reads a canonical numeral starting at ``position``.

    Returns the value and the position after the numeral.

    >>> parse_numeral('S((S(S(0))*S(0)))')
    (3, 17)

    Raises:
        ValueError: when the text is not a canonical numeral.

    """
    start = position
    wrappers: List[str] = []
    while not text.startswith(_ZERO, position):
        if text.startswith(_DOUBLE, position):
            wrappers.append(_DOUBLE)
            position += len(_DOUBLE)
        elif text.startswith(_SUCCESSOR, position):
            wrappers.append(_SUCCESSOR)
            position += len(_SUCCESSOR)
        else:
            raise ValueError('No numeral at position {0}'.format(position))
    position += len(_ZERO)

    closing = _CLOSE * len(wrappers)
    if not text.startswith(closing, position):
        raise ValueError('Unbalanced numeral at position {0}'.format(start))
    position += len(closing)

    number = 0
    for wrapper in reversed(wrappers):
        number = number * 2 if wrapper == _DOUBLE else number + 1
    if render_numeral(number) != text[start:position]:
        raise ValueError('Numeral is not canonical: {0}'.format(
            text[start:position],
        ))
    return number, position
