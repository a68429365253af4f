# -*- coding: utf-8 -*-

"""
Parameter types of the command line.

Numbers are decimal or ``0x`` prefixed hexadecimal numerals.
Wherever a program is expected, a stock program name works too.
"""

from types import MappingProxyType
from typing import Callable, Mapping, Optional

import click
from typing_extensions import Final, final

from krt_toolkit.combinators import stock

#: Programs that can be named instead of numbered.
STOCK_PROGRAMS: Final[Mapping[str, Callable[[], int]]] = MappingProxyType({
    'identity': stock.identity,
    'successor': stock.successor,
    'diverger': stock.diverger,
    'first': stock.first,
    'second': stock.second,
    'pad': stock.pad_program,
})

_HEX_PREFIX: Final = '0x'


def parse_natural(text: str) -> int:
    """
    Parses a decimal or hexadecimal numeral.

    >>> parse_natural('42'), parse_natural('0x2A')
    (42, 42)

    Raises:
        ValueError: when the text is not a natural number.

    """
    normalized = text.strip().lower()
    digits, base = normalized, 10
    if normalized.startswith(_HEX_PREFIX):
        digits, base = normalized[len(_HEX_PREFIX):], 16
    if digits.isalnum():
        try:
            return int(digits, base)
        except ValueError:
            pass  # noqa: WPS420
    raise ValueError('Not a natural number: {0!r}'.format(text))


def parse_program(text: str) -> int:
    """
    Parses a program code or a stock program name.

    Raises:
        ValueError: when the text is neither.

    """
    factory = STOCK_PROGRAMS.get(text.strip().lower())
    if factory is not None:
        return factory()
    return parse_natural(text)


class _ParsedType(click.ParamType):
    parser: Callable[[str], int]

    def convert(
        self,
        value,
        param: Optional[click.Parameter],
        ctx: Optional[click.Context],
    ) -> int:
        """Turns parse errors into usage errors."""
        if isinstance(value, int):
            return value
        try:
            return type(self).parser(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)
            raise


@final
class NaturalType(_ParsedType):
    """A natural number."""

    name = 'natural'
    parser = staticmethod(parse_natural)


@final
class ProgramType(_ParsedType):
    """A program code or a stock program name."""

    name = 'program'
    parser = staticmethod(parse_program)


NATURAL: Final = NaturalType()
PROGRAM: Final = ProgramType()
