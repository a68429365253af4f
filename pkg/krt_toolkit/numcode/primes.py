# -*- coding: utf-8 -*-

import functools
import itertools
from typing import List


def _is_prime(candidate: int, known: List[int]) -> bool:
    for divisor in known:
        if divisor * divisor > candidate:
            return True
        if candidate % divisor == 0:
            return False
    return True


@functools.lru_cache(maxsize=1024)
def nth_prime(index: int) -> int:
    """
    Returns the prime with the given index, counting from ``prime(0) = 2``.

    Uses plain trial division.

    >>> [nth_prime(index) for index in range(5)]
    [2, 3, 5, 7, 11]

    """
    if index < 0:
        raise ValueError('Prime index must be natural, got: {0}'.format(
            index,
        ))
    known: List[int] = []
    for candidate in itertools.count(2):
        if _is_prime(candidate, known):
            known.append(candidate)
            if len(known) > index:
                return candidate
    raise AssertionError('unreachable')  # pragma: no cover
