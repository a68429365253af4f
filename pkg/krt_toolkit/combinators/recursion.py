# -*- coding: utf-8 -*-

"""
Constructive recursion theorems.

Self reference is obtained by the usual double application of S-m-n:
a template ``t`` receives its own code,
so ``smn(t, t)`` can rebuild itself with the ``STORE`` primitive.

Calling conventions of tasks:

- ``krt(p, r)`` runs ``r`` on ``⟨self, ⟨p, x⟩⟩``
- ``krt_plain(r)`` runs ``r`` on ``⟨self, x⟩``
- ``mixed_rt`` runs the task number ``i`` on ``⟨e1, …, en, c, y⟩``
  and the delayed task on ``⟨e1, …, en, c, x, y⟩``,
  both as right nested tuples

"""

import functools
import logging
from typing import Sequence, Tuple

import attr
from typing_extensions import Final, final

from krt_toolkit.basesys.instructions import PrimitiveId
from krt_toolkit.combinators.assembler import Assembler
from krt_toolkit.combinators.specialize import smn
from krt_toolkit.numcode import bitlen

logger = logging.getLogger(__name__)

#: Registers of the dispatcher that keep ``e1``, ``e2``, and so on.
_INDICES: Final = 11


def _self_reproducing(program: Assembler) -> Assembler:
    # r1 = template, r2 = payload, r5 = smn(template, template)
    program.unpair(1, 2, 0)
    return program.call(PrimitiveId.STORE, 5, (1, 1), scratch=3)


@functools.lru_cache(maxsize=1024)
def krt(parameter: int, task: int) -> int:
    """
    Returns ``q`` with ``φ_q(x) = φ_task(⟨q, ⟨parameter, x⟩⟩)``.

    The cost of ``q`` is the cost of the task plus a linear overhead
    for rebuilding ``q`` and pairing the task input.
    """
    program = _self_reproducing(Assembler())
    program.set(6, parameter).pair(7, 6, 2).pair(7, 5, 7)
    program.simulate_known(0, task, 7, scratch=8)
    template = program.halt(0).code()
    fixed_point = smn(template, template)
    logger.debug(
        'krt: task of %d bits gives a fixed point of %d bits',
        bitlen(task), bitlen(fixed_point),
    )
    return fixed_point


@functools.lru_cache(maxsize=1024)
def krt_plain(task: int) -> int:
    """Returns ``q`` with ``φ_q(x) = φ_task(⟨q, x⟩)``."""
    program = _self_reproducing(Assembler())
    program.pair(7, 5, 2)
    program.simulate_known(0, task, 7, scratch=8)
    template = program.halt(0).code()
    return smn(template, template)


@final
@attr.dataclass(frozen=True, slots=True)
class MixedRecursion(object):
    """
    Programs given by the mixed recursion theorem.

    Attributes:
        indices: ``e1, …, en``.
        delayed: ``c``, a total program that outputs program codes.
        dispatcher: the self-referential program both are cut from.

    """

    indices: Tuple[int, ...]
    delayed: int
    dispatcher: int


def _dispatcher(  # noqa: WPS210
    tasks: Tuple[int, ...],
    delayed_task: int,
) -> int:
    count = len(tasks)
    accumulator = _INDICES + count
    program = Assembler()
    # r1 = d, r3 = selector, r4 = y
    program.unpair(1, 2, 0).unpair(3, 4, 2)
    program.copy(5, 1).set(6, 0).ext(PrimitiveId.STORE, 7, 5)
    for index in range(1, count + 1):
        program.set(6, index).ext(PrimitiveId.STORE, _INDICES + index - 1, 5)

    program.jz(3, 'emit')
    for index in range(1, count + 1):
        program.dec(3).jz(3, 'task.{0}'.format(index))
    program.dec(3).pair(accumulator, 3, 4)
    _prepend_indices(program, count)
    program.simulate_known(
        0, delayed_task, accumulator, scratch=accumulator + 1,
    ).halt(0)

    program.label('emit').copy(6, 4)
    for _ in range(count + 1):
        program.inc(6)
    program.ext(PrimitiveId.STORE, 0, 5).halt(0)

    for index, task in enumerate(tasks, start=1):
        program.label('task.{0}'.format(index)).copy(accumulator, 4)
        _prepend_indices(program, count)
        program.simulate_known(
            0, task, accumulator, scratch=accumulator + 1,
        ).halt(0)
    return program.code()


def _prepend_indices(program: Assembler, count: int) -> None:
    # accumulator := ⟨e1, …, en, c, accumulator⟩
    accumulator = _INDICES + count
    program.pair(accumulator, 7, accumulator)
    for register in reversed(range(_INDICES, accumulator)):
        program.pair(accumulator, register, accumulator)


def mixed_rt(tasks: Sequence[int], delayed_task: int) -> MixedRecursion:
    """
    Builds ``e1, …, en`` and ``c`` for the given tasks.

    They satisfy, for all ``x`` and ``y``::

        φ_ei(y) = φ_task_i(⟨e1, …, en, c, y⟩)
        φ_φc(x)(y) = φ_delayed(⟨e1, …, en, c, x, y⟩)

    ``φ_c`` is total and never runs any task.

    Raises:
        ValueError: when there are no tasks.

    """
    if not tasks:
        raise ValueError('Mixed recursion needs at least one task')
    dispatcher = krt_plain(_dispatcher(tuple(tasks), delayed_task))
    return MixedRecursion(
        indices=tuple(
            smn(dispatcher, index) for index in range(1, len(tasks) + 1)
        ),
        delayed=smn(dispatcher, 0),
        dispatcher=dispatcher,
    )
