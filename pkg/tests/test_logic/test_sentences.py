# -*- coding: utf-8 -*-

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krt_toolkit.logic.sentences import (
    PHI,
    TEMPLATE_ARITY,
    Sentence,
    SystemKind,
    SystemTag,
    Template,
    parse_sentence,
    quote,
    substitute,
    unquote,
)

naturals = st.integers(min_value=0, max_value=2 ** 80)


@st.composite
def sentences(draw):
    """Draws closed sentences of every template and system."""
    template = draw(st.sampled_from(Template))
    kind = draw(st.sampled_from(SystemKind))
    system = PHI
    if kind != SystemKind.PHI:
        system = SystemTag(kind, draw(naturals))
    arguments = draw(st.lists(
        naturals,
        min_size=TEMPLATE_ARITY[template],
        max_size=TEMPLATE_ARITY[template],
    ))
    return Sentence(template, system, arguments)


@given(sentences())
def test_text_round_trip(sentence):
    """Ensures that the text form parses back."""
    assert parse_sentence(str(sentence)) == sentence


@given(sentences())
def test_code_round_trip(sentence):
    """Ensures that register codes decode back."""
    assert Sentence.from_code(sentence.to_code()) == sentence


@given(st.lists(naturals, min_size=6, max_size=6))
def test_quote_round_trip(fields):
    """Ensures that six fields survive quoting."""
    assert unquote(quote(tuple(fields))) == tuple(fields)


@pytest.mark.parametrize('text', [
    'Equiv[phi](0, S(0))',
    'ExistsDistinctEquiv[psi:S(0)]()',
    'IsUniversal[zeta:0](S(0))',
    'HaltsWith[phi](0, 0, 0)',
])
def test_known_sentences(text):
    """Ensures that canonical texts are accepted as they are."""
    assert str(parse_sentence(text)) == text


@pytest.mark.parametrize('text', [
    'Equiv[phi](0)',
    'Equiv[phi](0,S(0))',
    'Equiv[phi:S(0)](0, 0)',
    'Unknown[phi]()',
    'ExistsUniversal[omega:0]()',
    'ExistsUniversal[theta:0]() ',
])
def test_malformed_sentences(text):
    """Ensures that malformed texts are rejected."""
    with pytest.raises(ValueError):
        parse_sentence(text)


def test_substitute():
    """Ensures that substitution checks the template arity."""
    assert substitute(Template.EQUIV, PHI, 1, 2).arguments == (1, 2)
    with pytest.raises(ValueError):
        substitute(Template.EQUIV, PHI, 1)


@pytest.mark.parametrize('fields', [
    (99, 0, 0, 0, 0, 0),
    (1, 0, 0, 5, 0, 0),
    (0, 0, 3, 0, 0, 0),
    (0, 9, 0, 0, 0, 0),
])
def test_codes_without_sentences(fields):
    """Ensures that register codes must name a closed sentence."""
    with pytest.raises(ValueError):
        Sentence.from_code(quote(fields))


def test_invalid_tags():
    """Ensures that the base system has no defining code."""
    with pytest.raises(ValueError):
        SystemTag(SystemKind.PHI, 1)
    with pytest.raises(ValueError):
        SystemTag(SystemKind.PSI, -1)
