# -*- coding: utf-8 -*-

"""
Sentence patterns: sentences with ``*`` in place of some numerals.

A wildcard may stand for the system code or for any argument numeral,
so that a sentence mentioning a program can be matched
before the code of that program is known.

>>> pattern = parse_pattern('Equiv[phi](*, S(0))')
>>> pattern.matches(parse_sentence('Equiv[phi](0, S(0))'))
True

"""

from typing import List, Optional, Tuple

import attr
from typing_extensions import Final, final

from krt_toolkit.logic.numerals import parse_numeral, render_numeral
from krt_toolkit.logic.sentences import (
    HEADER,
    TEMPLATE_ARITY,
    TEMPLATE_NAMES,
    Sentence,
    SystemKind,
    Template,
    parse_kind,
    parse_sentence,
    parse_template,
)

#: Marks a slot that matches any numeral.
WILDCARD: Final = '*'

_Slot = Optional[int]


def _render_slot(slot: _Slot) -> str:
    return WILDCARD if slot is None else render_numeral(slot)


def _slot_matches(slot: _Slot, number: int) -> bool:
    return slot is None or slot == number


@final
@attr.dataclass(frozen=True, slots=True)
class SentencePattern(object):
    """Template, system kind, and numerals that may be wildcards."""

    template: Template = attr.ib(converter=Template)
    kind: SystemKind = attr.ib(converter=SystemKind)
    code: _Slot = None
    arguments: Tuple[_Slot, ...] = attr.ib(default=(), converter=tuple)

    def __attrs_post_init__(self) -> None:
        """Checks the numeral count against the template."""
        expected = TEMPLATE_ARITY[self.template]
        if len(self.arguments) != expected:
            raise ValueError('{0} takes {1} numerals, got: {2}'.format(
                TEMPLATE_NAMES[self.template], expected, len(self.arguments),
            ))

    def __str__(self) -> str:
        """Text form, the same as for sentences plus wildcards."""
        system = self.kind.name.lower()
        if self.kind != SystemKind.PHI:
            system = '{0}:{1}'.format(system, _render_slot(self.code))
        return '{0}[{1}]({2})'.format(
            TEMPLATE_NAMES[self.template],
            system,
            ', '.join(_render_slot(slot) for slot in self.arguments),
        )

    def matches(self, sentence: Sentence) -> bool:
        """Whether the sentence is an instance of the pattern."""
        return (
            self.template == sentence.template and
            self.kind == sentence.system.kind and
            _slot_matches(self.code, sentence.system.code) and
            all(
                _slot_matches(slot, number)
                for slot, number in zip(self.arguments, sentence.arguments)
            )
        )


def exact_pattern(sentence: Sentence) -> SentencePattern:
    """Pattern that matches exactly one sentence."""
    return SentencePattern(
        sentence.template,
        sentence.system.kind,
        sentence.system.code,
        sentence.arguments,
    )


def _parse_slot(text: str, position: int) -> Tuple[_Slot, int]:
    if text.startswith(WILDCARD, position):
        return None, position + len(WILDCARD)
    return parse_numeral(text, position)


def parse_pattern(text: str) -> SentencePattern:
    """
    Reads the text form of a pattern.

    Raises:
        ValueError: when the text is not a pattern.

    """
    if WILDCARD not in text:
        return exact_pattern(parse_sentence(text))

    match = HEADER.match(text)
    if match is None:
        raise ValueError('Not a sentence pattern: {0}'.format(text))
    name, kind_name, code_text = match.groups()
    template = parse_template(name)
    code: _Slot = None
    if code_text is not None:
        code, end = _parse_slot(code_text, 0)
        if end != len(code_text):
            raise ValueError('Malformed system code: {0}'.format(code_text))

    position = match.end()
    slots: List[_Slot] = []
    while not text.startswith(')', position):
        if slots:
            if not text.startswith(', ', position):
                raise ValueError('Expected a comma at {0}'.format(position))
            position += 2
        slot, position = _parse_slot(text, position)
        slots.append(slot)
    if position + 1 != len(text):
        raise ValueError('Trailing text after pattern: {0}'.format(text))

    kind = parse_kind(kind_name)
    if kind == SystemKind.PHI:
        code = 0
    pattern = SentencePattern(template, kind, code, slots)
    if str(pattern) != text:
        raise ValueError('Pattern is not canonical: {0}'.format(text))
    return pattern
