# -*- coding: utf-8 -*-

"""
Canonical codes for finite sets with at most two members.

The empty set is coded by ``0``. A set ``{u, u + v}`` is coded by
``⟨u, v⟩ + 1``, so ``v = 0`` codes the singleton ``{u}``.
Decoding is total: every natural number names exactly one such set.
"""

from typing import AbstractSet, FrozenSet

import attr
from typing_extensions import Final, final

from krt_toolkit.numcode.pairing import pair, unpair

#: Largest set cardinality that has a code.
MAX_CARDINALITY: Final = 2


@final
@attr.dataclass(frozen=True, slots=True)
class SetCode(object):
    """Code of a finite set of cardinality at most two."""

    code: int = attr.ib()

    @code.validator
    def _check_code(self, attribute, field_value) -> None:
        if field_value < 0:
            raise ValueError('Set code must be natural, got: {0}'.format(
                field_value,
            ))

    def __int__(self) -> int:
        """Returns the raw number."""
        return self.code

    def members(self) -> FrozenSet[int]:
        """Returns the decoded set."""
        return set_decode(self.code)


def set_encode(members: AbstractSet[int]) -> SetCode:
    """
    Codes a set of at most two natural numbers.

    >>> set_encode(set()).code, set_encode({0}).code
    (0, 1)

    >>> set_encode({3, 5}).code
    15

    Raises:
        ValueError: when the set is too large.

    """
    if len(members) > MAX_CARDINALITY:
        raise ValueError(
            'Only sets of at most {0} numbers have codes: {1}'.format(
                MAX_CARDINALITY, sorted(members),
            ),
        )
    if not members:
        return SetCode(0)
    smallest = min(members)
    return SetCode(pair(smallest, max(members) - smallest) + 1)


def set_decode(code: int) -> FrozenSet[int]:
    """
    Decodes any natural number into the set it names.

    >>> sorted(set_decode(15))
    [3, 5]

    """
    code = int(code)
    if code == 0:
        return frozenset()
    smallest, difference = unpair(code - 1)
    return frozenset((smallest, smallest + difference))
