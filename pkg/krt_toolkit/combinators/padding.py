# -*- coding: utf-8 -*-

"""
Two independent ways to get a different code for the same function.

:func:`pad` always grows its argument and keeps it even:
abnormal codes move to the next even abnormal code,
normal codes get their padding counter incremented.

:func:`pad_once` only promises a different code.
It is built from the recursion theorem and a self test,
without looking at how codes are numbered.
"""

import enum
import functools
import itertools
from typing import List

import attr
from typing_extensions import final

from krt_toolkit.basesys.encoding import (
    ProgramBody,
    decode_program,
    encode_program,
)
from krt_toolkit.basesys.instructions import PrimitiveId
from krt_toolkit.basesys.primitives import Primitive, total_primitive
from krt_toolkit.combinators.assembler import Assembler
from krt_toolkit.combinators.recursion import krt
from krt_toolkit.numcode import bitlen


def pad(code: int) -> int:
    """
    Returns an even, larger, equivalent code.

    >>> pad(1), pad(2), pad(7)
    (2, 4, 8)

    """
    body = decode_program(code)
    if isinstance(body, ProgramBody):
        return encode_program(body.padded())
    for candidate in itertools.count(code + 1):
        if candidate % 2 == 0 and not isinstance(
            decode_program(candidate), ProgramBody,
        ):
            return candidate
    raise AssertionError('unreachable')  # pragma: no cover


def padding_primitives() -> List[Primitive]:
    """The ``PAD`` primitive."""
    return [total_primitive(PrimitiveId.PAD, pad, bitlen)]


@final
class PaddingCase(enum.IntEnum):
    """Which case of the padding-once construction produced the code."""

    #: ``f(p) ≠ p``, the fixed point itself is the answer.
    fixed_point_differs = 1

    #: ``f(p) = p``, so ``p + 1`` computes the same function as ``p``.
    successor = 2


@final
@attr.dataclass(frozen=True, slots=True)
class PaddedOnce(object):
    """Result of :func:`pad_once_traced`."""

    code: int
    fixed_point: int
    case: PaddingCase


@functools.lru_cache(maxsize=None)
def _self_test_task() -> int:
    # ⟨self, ⟨p, x⟩⟩ ↦ φ_p(x) when self ≠ p, else φ_(p+1)(x)
    program = Assembler().unpair(1, 2, 0).unpair(3, 4, 2)
    program.call(PrimitiveId.EQUAL, 5, (1, 3), scratch=6)
    program.jz(5, 'run').inc(3)
    program.label('run').simulate(0, 3, 4, scratch=6)
    return program.halt(0).code()


def pad_once_traced(code: int) -> PaddedOnce:
    """Builds the padding-once code and reports which case applied."""
    fixed_point = krt(code, _self_test_task())
    if fixed_point != code:
        return PaddedOnce(
            fixed_point, fixed_point, PaddingCase.fixed_point_differs,
        )
    return PaddedOnce(code + 1, fixed_point, PaddingCase.successor)


def pad_once(code: int) -> int:
    """Returns a code that differs from ``code`` and computes the same."""
    return pad_once_traced(code).code
