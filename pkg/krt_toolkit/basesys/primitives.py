# -*- coding: utf-8 -*-

"""
Host primitives reachable through the ``EXT`` instruction.

Every primitive declares its cost before it computes anything,
so that a primitive never does more work than the caller can pay for.
Primitives that can not finish within the allowance report ``None``.

This module defines the primitive record and the arithmetic primitives.
Primitives over codes, sentences, and simulation live next to the
code they wrap and are collected by :mod:`krt_toolkit.system`.
"""

from typing import TYPE_CHECKING, Callable, List, Optional, Tuple, Union

import attr
from typing_extensions import final

from krt_toolkit.basesys.instructions import PRIMITIVE_ARITY, PrimitiveId
from krt_toolkit.numcode import bitlen, nth_prime

if TYPE_CHECKING:  # pragma: no cover
    from krt_toolkit.basesys.machine import Machine  # noqa: F401

#: Arguments a primitive receives, read from consecutive registers.
Arguments = Tuple[int, ...]


@final
@attr.dataclass(frozen=True, slots=True)
class Charged(object):
    """Value computed by a primitive together with its cost."""

    value: int
    cost: int


@final
@attr.dataclass(frozen=True, slots=True)
class Subrun(object):
    """
    Asks the machine to run ``program`` on ``argument``.

    The machine charges the steps of the nested run
    and stores its output in the destination register.
    Nested runs live on the machine's own frame stack,
    so nesting depth is bounded by the budget only.
    """

    program: int
    argument: int


#: What a primitive reports: a charged value, a nested run, or ``None``.
PrimitiveResult = Optional[Union[Charged, Subrun]]

#: Runs a primitive within an allowance of steps.
PrimitiveFunction = Callable[['Machine', Arguments, int], PrimitiveResult]


@final
@attr.dataclass(frozen=True, slots=True)
class Primitive(object):
    """A registered host primitive."""

    identifier: PrimitiveId
    evaluate: PrimitiveFunction

    @property
    def arity(self) -> int:
        """Number of argument registers."""
        return PRIMITIVE_ARITY[self.identifier]

    def invoke(
        self,
        machine: 'Machine',
        arguments: Arguments,
        allowance: int,
    ) -> PrimitiveResult:
        """Calls the primitive, ``None`` means the allowance ran out."""
        charged = self.evaluate(machine, arguments, allowance)
        if isinstance(charged, Charged) and charged.cost > allowance:
            return None
        return charged


def total_primitive(
    identifier: PrimitiveId,
    function: Callable[..., int],
    cost: Callable[..., int],
) -> Primitive:
    """
    Wraps a total function that does not need the machine.

    ``cost`` receives the same arguments as ``function``
    and is checked against the allowance before ``function`` runs.
    """
    def evaluate(
        machine: 'Machine',
        arguments: Arguments,
        allowance: int,
    ) -> Optional[Charged]:
        price = cost(*arguments)
        if price > allowance:
            return None
        return Charged(function(*arguments), price)
    return Primitive(identifier, evaluate)


def _widest(*arguments: int) -> int:
    return max(bitlen(argument) for argument in arguments)


def _power_cost(base: int, exponent: int) -> int:
    return bitlen(base) * exponent + 1


def arithmetic_primitives() -> List[Primitive]:
    """Comparison and arithmetic primitives."""
    return [
        total_primitive(
            PrimitiveId.EQUAL,
            lambda first, second: int(first == second),
            _widest,
        ),
        total_primitive(
            PrimitiveId.LESS,
            lambda first, second: int(first < second),
            _widest,
        ),
        total_primitive(
            PrimitiveId.PARITY,
            lambda number: number % 2,
            lambda number: 1,
        ),
        total_primitive(PrimitiveId.POWER, pow, _power_cost),
        total_primitive(
            PrimitiveId.PRIME,
            nth_prime,
            lambda index: index + 1,
        ),
    ]
