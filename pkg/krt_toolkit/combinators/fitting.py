# -*- coding: utf-8 -*-

from typing import Iterable, Tuple


def fit_overhead(samples: Iterable[Tuple[int, int]]) -> int:
    """
    Returns the least ``b`` with ``cost ≤ b · size`` for every sample.

    Samples are ``(cost, size)`` pairs with positive sizes.

    >>> fit_overhead([(10, 3), (4, 4)])
    4

    >>> fit_overhead([])
    0

    """
    constant = 0
    for cost, size in samples:
        if size <= 0:
            raise ValueError('Sample size must be positive, got: {0}'.format(
                size,
            ))
        constant = max(constant, -(-cost // size))
    return constant
