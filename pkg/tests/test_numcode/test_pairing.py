# -*- coding: utf-8 -*-

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krt_toolkit.numcode import bitlen, pair, tuple_decode, tuple_encode, unpair
from krt_toolkit.numcode.pairing import _wide_pair, _wide_unpair

naturals = st.integers(min_value=0, max_value=2 ** 200)
small_naturals = st.integers(min_value=0, max_value=2 ** 32 - 1)


def test_worked_example():
    """Ensures that digits alternate, starting with the second number."""
    assert pair(15, 2) == 0b10101110
    assert unpair(0b10101110) == (15, 2)


@given(naturals, naturals)
def test_pair_round_trip(first, second):
    """Ensures that unpairing inverts pairing for any width."""
    assert unpair(pair(first, second)) == (first, second)


@given(naturals)
def test_unpair_round_trip(paired):
    """Ensures that pairing is onto."""
    assert pair(*unpair(paired)) == paired


@given(small_naturals, small_naturals)
def test_wide_path_agrees(first, second):
    """Ensures that the table path and the mask path agree."""
    paired = pair(first, second)

    assert _wide_pair(first, second) == paired
    assert _wide_unpair(paired) == (first, second)


@given(naturals, naturals)
def test_pair_length(first, second):
    """Ensures that a pair is at most twice as long as its halves."""
    assert bitlen(pair(first, second)) <= 2 * max(
        bitlen(first), bitlen(second),
    )


@given(st.lists(naturals, min_size=2, max_size=6))
def test_tuple_round_trip(elements):
    """Ensures that tuples decode with the arity they were coded with."""
    encoded = tuple_encode(elements, len(elements))

    assert tuple_decode(encoded, len(elements)) == elements
    assert encoded % 2 == elements[-1] % 2


@given(st.lists(naturals, min_size=2, max_size=6))
def test_tuple_length(elements):
    """Ensures that tuple codes stay within the nested pairing bound."""
    encoded = tuple_encode(elements, len(elements))
    widest = max(bitlen(element) for element in elements)

    assert bitlen(encoded) <= 2 ** (len(elements) - 1) * widest


@pytest.mark.parametrize('elements, arity', [
    ([1], 1),
    ([1, 2], 3),
    ([], 2),
])
def test_tuple_arity(elements, arity):
    """Ensures that mismatching arities are rejected."""
    with pytest.raises(ValueError):
        tuple_encode(elements, arity)


def test_negative_numbers():
    """Ensures that only natural numbers are paired."""
    with pytest.raises(ValueError):
        pair(-1, 0)
    with pytest.raises(ValueError):
        unpair(-1)
