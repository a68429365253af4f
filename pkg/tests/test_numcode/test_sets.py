# -*- coding: utf-8 -*-

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krt_toolkit.numcode import SetCode, set_decode, set_encode

naturals = st.integers(min_value=0, max_value=2 ** 100)


@given(st.sets(naturals, max_size=2))
def test_set_round_trip(members):
    """Ensures that small sets survive coding."""
    assert set_decode(set_encode(members).code) == members
    assert set_encode(members).members() == members


@given(naturals)
def test_codes_are_canonical(code):
    """Ensures that every number codes exactly one set."""
    assert set_encode(set_decode(code)).code == code


@pytest.mark.parametrize('members, code', [
    (set(), 0),
    ({0}, 1),
    ({3, 5}, 15),
])
def test_known_codes(members, code):
    """Ensures that the canonical codes are stable."""
    assert set_encode(members) == SetCode(code)
    assert int(set_encode(members)) == code


def test_large_sets():
    """Ensures that sets of three numbers have no code."""
    with pytest.raises(ValueError):
        set_encode({1, 2, 3})


def test_negative_code():
    """Ensures that set codes are natural."""
    with pytest.raises(ValueError):
        SetCode(-1)
