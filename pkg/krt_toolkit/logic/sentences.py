# -*- coding: utf-8 -*-

"""
Closed sentences the constructions talk about.

.. list-table::
   :header-rows: 1

   * - Template
     - Numerals
     - Reading
   * - ``Equiv``
     - ``a, b``
     - programs ``a`` and ``b`` compute the same function in the system
   * - ``ExistsDistinctEquiv``
     -
     - two different programs of the system compute the same function
   * - ``IsUniversal``
     - ``u``
     - ``u`` is universal in the system
   * - ``ExistsUniversal``
     -
     - some program is universal in the system
   * - ``HaltsWith``
     - ``p, x, y``
     - ``φ_p(x)`` halts with output ``y``

A sentence is written as ``Template[system](numeral, …)``,
for example ``Equiv[phi](S(0), 0)`` or ``ExistsDistinctEquiv[psi:S(0)]()``.
Derived systems carry the numeral of their defining code.

Programs quote sentences by their register code:
``1`` followed by the self-delimiting codes of the template,
the system kind, the system code, and three argument slots,
unused slots being zero.
"""

import enum
import re
from typing import Dict, List, Tuple

import attr
from typing_extensions import Final, final

from krt_toolkit.basesys.primitives import Arguments
from krt_toolkit.logic.numerals import parse_numeral, render_numeral
from krt_toolkit.numcode import decode_delta, encode_delta

#: Number of argument slots in a register code.
ARGUMENT_SLOTS: Final = 3

#: Fields of a register code: template, kind, system code, and the slots.
CODE_FIELDS: Final = 3 + ARGUMENT_SLOTS


@final
class Template(enum.IntEnum):
    """Sentence templates, their numbers are part of register codes."""

    EQUIV = 0
    EXISTS_DISTINCT_EQUIV = 1
    IS_UNIVERSAL = 2
    EXISTS_UNIVERSAL = 3
    HALTS_WITH = 4


#: Numerals each template takes.
TEMPLATE_ARITY: Final[Dict[Template, int]] = {
    Template.EQUIV: 2,
    Template.EXISTS_DISTINCT_EQUIV: 0,
    Template.IS_UNIVERSAL: 1,
    Template.EXISTS_UNIVERSAL: 0,
    Template.HALTS_WITH: 3,
}

#: Names used in the text form.
TEMPLATE_NAMES: Final[Dict[Template, str]] = {
    Template.EQUIV: 'Equiv',
    Template.EXISTS_DISTINCT_EQUIV: 'ExistsDistinctEquiv',
    Template.IS_UNIVERSAL: 'IsUniversal',
    Template.EXISTS_UNIVERSAL: 'ExistsUniversal',
    Template.HALTS_WITH: 'HaltsWith',
}

_TEMPLATES_BY_NAME: Final = {
    name: template for template, name in TEMPLATE_NAMES.items()
}


@final
class SystemKind(enum.IntEnum):
    """Programming systems a sentence may speak of."""

    PHI = 0
    PSI = 1
    ETA = 2
    THETA = 3
    ZETA = 4


@final
@attr.dataclass(frozen=True, slots=True)
class SystemTag(object):
    """
    Names a programming system.

    The base system has no defining code,
    every derived system is represented by its defining code.
    """

    kind: SystemKind = attr.ib(converter=SystemKind)
    code: int = 0

    def __attrs_post_init__(self) -> None:
        """Checks the code against the kind."""
        if self.code < 0:
            raise ValueError('System code must be natural, got: {0}'.format(
                self.code,
            ))
        if self.kind == SystemKind.PHI and self.code:
            raise ValueError('The base system has no defining code')

    def __str__(self) -> str:
        """Text form used inside sentences."""
        if self.kind == SystemKind.PHI:
            return 'phi'
        return '{0}:{1}'.format(self.kind.name.lower(), render_numeral(
            self.code,
        ))


#: The base system.
PHI: Final = SystemTag(SystemKind.PHI)


@final
@attr.dataclass(frozen=True, slots=True)
class Sentence(object):
    """A template instance with numerals substituted."""

    template: Template = attr.ib(converter=Template)
    system: SystemTag
    arguments: Tuple[int, ...] = attr.ib(default=(), converter=tuple)

    def __attrs_post_init__(self) -> None:
        """Checks that the sentence is closed."""
        expected = TEMPLATE_ARITY[self.template]
        if len(self.arguments) != expected:
            raise ValueError('{0} takes {1} numerals, got: {2}'.format(
                TEMPLATE_NAMES[self.template], expected, len(self.arguments),
            ))
        if any(argument < 0 for argument in self.arguments):
            raise ValueError('Numerals are natural, got: {0}'.format(
                self.arguments,
            ))

    def __str__(self) -> str:
        """Canonical text form."""
        return '{0}[{1}]({2})'.format(
            TEMPLATE_NAMES[self.template],
            self.system,
            ', '.join(render_numeral(argument) for argument in self.arguments),
        )

    def to_code(self) -> int:
        """Register code of the sentence."""
        slots = self.arguments + (0,) * (ARGUMENT_SLOTS - len(self.arguments))
        return quote((
            self.template, self.system.kind, self.system.code, *slots,
        ))

    @classmethod
    def from_code(cls, code: int) -> 'Sentence':
        """
        Decodes a register code.

        Raises:
            ValueError: when the code names no sentence.

        """
        fields = unquote(code)
        template = Template(fields[0])
        arity = TEMPLATE_ARITY[template]
        slots = fields[3:]
        if any(slots[arity:]):
            raise ValueError('Unused numeral slots must be zero: {0}'.format(
                slots,
            ))
        return cls(template, SystemTag(fields[1], fields[2]), slots[:arity])


def substitute(
    template: Template,
    system: SystemTag,
    *numerals: int,
) -> Sentence:
    """
    Puts numerals into a template.

    >>> str(substitute(Template.EQUIV, PHI, 3, 3))
    'Equiv[phi](S((S(S(0))*S(0))), S((S(S(0))*S(0))))'

    Raises:
        ValueError: when the number of numerals does not match.

    """
    return Sentence(template, system, numerals)


def quote(fields: Arguments) -> int:
    """
    Joins six natural numbers into a register code.

    >>> unquote(quote((1, 2, 3, 4, 5, 6)))
    (1, 2, 3, 4, 5, 6)

    """
    if len(fields) != CODE_FIELDS:
        raise ValueError('Register codes have {0} fields, got: {1}'.format(
            CODE_FIELDS, len(fields),
        ))
    return int(
        '1' + ''.join(encode_delta(int(field)) for field in fields), 2,
    )


def unquote(code: int) -> Tuple[int, ...]:
    """
    Splits a register code into its six fields.

    Raises:
        ValueError: when the code is not a join of six fields.

    """
    bits = format(code, 'b')
    if not bits.startswith('1'):
        raise ValueError('Register codes start with a one bit')
    position = 1
    fields: List[int] = []
    for _ in range(CODE_FIELDS):
        field, position = decode_delta(bits, position)
        fields.append(field)
    if position != len(bits):
        raise ValueError('Trailing bits in register code {0}'.format(code))
    return tuple(fields)


#: Template name, system kind, and optional system code of the text form.
HEADER: Final = re.compile(r'([A-Za-z]+)\[([a-z]+)(?::([^\]]*))?\]\(')


def parse_sentence(text: str) -> Sentence:
    """
    Inverts ``str`` on sentences.

    Raises:
        ValueError: when the text is not a canonical sentence.

    """
    template, system, position = _parse_header(text)
    numerals: List[int] = []
    while not text.startswith(')', position):
        if numerals:
            if not text.startswith(', ', position):
                raise ValueError('Expected a comma at {0}'.format(position))
            position += 2
        numeral, position = parse_numeral(text, position)
        numerals.append(numeral)
    if position + 1 != len(text):
        raise ValueError('Trailing text after sentence: {0}'.format(text))
    sentence = Sentence(template, system, numerals)
    if str(sentence) != text:
        raise ValueError('Sentence is not canonical: {0}'.format(text))
    return sentence


def _parse_header(text: str) -> Tuple[Template, SystemTag, int]:
    match = HEADER.match(text)
    if match is None:
        raise ValueError('Not a sentence: {0}'.format(text))
    name, kind_name, numeral = match.groups()
    template = parse_template(name)
    kind = parse_kind(kind_name)
    code = 0
    if numeral is not None:
        code, end = parse_numeral(numeral)
        if end != len(numeral):
            raise ValueError('Malformed system code: {0}'.format(numeral))
    return template, SystemTag(kind, code), match.end()


def parse_template(name: str) -> Template:
    """Reads a template name such as ``Equiv``."""
    template = _TEMPLATES_BY_NAME.get(name)
    if template is None:
        raise ValueError('Unknown template: {0}'.format(name))
    return template


def parse_kind(name: str) -> SystemKind:
    """
    Reads a lower case system name.

    >>> parse_kind('zeta')
    <SystemKind.ZETA: 4>

    """
    try:
        return SystemKind[name.upper()]
    except KeyError:
        raise ValueError('Unknown system: {0}'.format(name))
