# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.numcode import nth_prime


@pytest.mark.parametrize('index, prime', [
    (0, 2),
    (1, 3),
    (4, 11),
    (24, 97),
    (999, 7919),
])
def test_nth_prime(index, prime):
    """Ensures that primes are counted from two."""
    assert nth_prime(index) == prime


def test_negative_index():
    """Ensures that prime indices are natural."""
    with pytest.raises(ValueError):
        nth_prime(-1)
