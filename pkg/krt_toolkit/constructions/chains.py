# -*- coding: utf-8 -*-

"""
Splitting ``ζ``-programs into the factors they were composed from.

``chain(p)`` is ``chain(r), s`` when ``p = φ_w(⟨r, s⟩)``
and just ``p`` otherwise.
``unchain`` composes a chain back, always from the left.
"""

from typing import List, Sequence, Tuple

import attr
from typing_extensions import final

from krt_toolkit.constructions.base import DerivedSystem
from krt_toolkit.constructions.zeta import compose, witness_preimage
from krt_toolkit.numcode import unpair


@final
@attr.dataclass(frozen=True, slots=True)
class Chain(object):
    """A non-empty sequence of ``ζ``-programs, composed in order."""

    elements: Tuple[int, ...] = attr.ib(converter=tuple)

    @elements.validator
    def _check_elements(self, attribute, field_value) -> None:
        if not field_value:
            raise ValueError('Chains have at least one element')

    def __len__(self) -> int:
        """Number of factors."""
        return len(self.elements)


def chain(system: DerivedSystem, program: int) -> Chain:
    """
    Returns the factors of ``program``.

    Raises:
        ValueError: when a helper does not halt within the system budget.

    """
    reversed_tail: List[int] = []
    current = program
    while True:
        preimage = witness_preimage(system, current)
        if preimage is None:
            break
        current, last = unpair(preimage)
        reversed_tail.append(last)
    return Chain((current, *reversed(reversed_tail)))


def unchain(system: DerivedSystem, elements: Sequence[int]) -> int:
    """
    Composes the factors from the left.

    >>> unchain(None, [7])
    7

    Raises:
        ValueError: when ``elements`` is empty,
            or ``w`` does not halt within the system budget.

    """
    factors = Chain(elements).elements
    composed = factors[0]
    for factor in factors[1:]:
        composed = compose(system, composed, factor)
    return composed
