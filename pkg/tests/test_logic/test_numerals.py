# -*- coding: utf-8 -*-

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krt_toolkit.logic.numerals import parse_numeral, render_numeral
from krt_toolkit.numcode import bitlen


@given(st.integers(min_value=0, max_value=2 ** 128))
def test_round_trip(number):
    """Ensures that numerals parse back to their value."""
    text = render_numeral(number)

    assert parse_numeral(text) == (number, len(text))


@given(st.integers(min_value=0, max_value=2 ** 128))
def test_linear_length(number):
    """Ensures that numerals are linear in the bit length."""
    assert len(render_numeral(number)) <= 14 * bitlen(number)


def test_parse_inside_text():
    """Ensures that numerals are read from the given position."""
    assert parse_numeral('x, S(0))', 3) == (1, 7)


@pytest.mark.parametrize('text', [
    '',
    'S(0',
    'S(S(0))',
    '(S(S(0))*0)',
    '1',
])
def test_malformed(text):
    """Ensures that unbalanced and non-canonical numerals are rejected."""
    with pytest.raises(ValueError):
        parse_numeral(text)


def test_negative():
    """Ensures that numerals are natural."""
    with pytest.raises(ValueError):
        render_numeral(-1)
