# -*- coding: utf-8 -*-

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krt_toolkit.numcode import bitlen, decode_delta, encode_delta


@given(st.lists(st.integers(min_value=0, max_value=2 ** 64), min_size=1))
def test_concatenation(numbers):
    """Ensures that concatenated codes parse back left to right."""
    bits = ''.join(encode_delta(number) for number in numbers)
    position = 0
    decoded = []
    while position < len(bits):
        number, position = decode_delta(bits, position)
        decoded.append(number)

    assert decoded == numbers


@given(st.integers(min_value=0, max_value=2 ** 64))
def test_code_length(number):
    """Ensures that codes are barely longer than the number."""
    assert len(encode_delta(number)) <= bitlen(number) + 2 * bitlen(
        bitlen(number + 1),
    ) + 1


@pytest.mark.parametrize('bits', [
    '',
    '000',
    '01',
    '00101',
])
def test_truncated(bits):
    """Ensures that truncated codes are rejected."""
    with pytest.raises(ValueError):
        decode_delta(bits, 0)
