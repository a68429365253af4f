# -*- coding: utf-8 -*-

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krt_toolkit.basesys.outcomes import Halted, OutOfBudget
from krt_toolkit.numcode import short_number, short_text
from krt_toolkit.numcode.display import SHORT_BITS

#: Wider than any interpreter converts to decimal by default.
_WIDE = 1 << 100000


@given(st.integers(min_value=0, max_value=2 ** SHORT_BITS - 1))
def test_ordinary_numbers(number):
    """Ensures that ordinary numbers are shown in decimal."""
    assert short_number(number) == str(number)


@given(st.integers(min_value=SHORT_BITS, max_value=200000))
def test_wide_numbers(width):
    """Ensures that wide numbers keep their leading bits and width."""
    shown = short_number((1 << width) | 1)

    assert shown.startswith('0x80000000')
    assert shown.endswith('<{0} bits>'.format(width + 1))


@pytest.mark.parametrize(('argument', 'expected'), [
    (Halted(_WIDE, 3), 'Halted(value=0x80000000…<100001 bits>, steps=3)'),
    (OutOfBudget(10), 'OutOfBudget(budget=10)'),
    ((1, [_WIDE]), '(1, [0x80000000…<100001 bits>])'),
    (True, 'True'),
    ('ψ', 'ψ'),
])
def test_short_text(argument, expected):
    """Ensures that numbers nested in records and sequences are shortened."""
    assert short_text(argument) == expected
