# -*- coding: utf-8 -*-

"""
Composition and conditionals over program codes.

Both combinators only write code,
the programs they receive run when the result runs.
"""

import functools
from typing import Sequence, Tuple

from typing_extensions import Final

from krt_toolkit.combinators.assembler import Assembler

#: First register that holds the results of the inner programs.
_RESULTS: Final = 10


def comp_m(outer: int, inner: Sequence[int]) -> int:
    """
    Returns a code for ``x ↦ φ_p0(⟨φ_p1(x), …, φ_pm(x)⟩)``.

    For a single inner program the outer one gets ``φ_p1(x)`` itself.
    The result diverges as soon as one of the inner programs does.

    Raises:
        ValueError: when there are no inner programs.

    """
    if not inner:
        raise ValueError('Composition needs at least one inner program')
    return _composition(outer, tuple(inner))


@functools.lru_cache(maxsize=1024)
def _composition(outer: int, inner: Tuple[int, ...]) -> int:
    program = Assembler().copy(1, 0)
    for index, code in enumerate(inner):
        program.simulate_known(_RESULTS + index, code, 1, scratch=2)

    last = _RESULTS + len(inner) - 1
    if len(inner) == 1:
        program.copy(4, last)
    else:
        program.pair(4, last - 1, last)
        for register in reversed(range(_RESULTS, last - 1)):
            program.pair(4, register, 4)

    program.simulate_known(0, outer, 4, scratch=2)
    return program.halt(0).code()


@functools.lru_cache(maxsize=1024)
def if_then_else(guard: int, then: int, otherwise: int) -> int:
    """
    Returns a code that runs ``then`` or ``otherwise`` on its input.

    ``then`` is chosen when ``φ_guard(x) ≠ 0`` and ``otherwise``
    when it is zero. A diverging guard makes the result diverge.
    """
    program = Assembler().copy(1, 0)
    program.simulate_known(4, guard, 1, scratch=2)
    program.jz(4, 'otherwise')
    program.simulate_known(0, then, 1, scratch=2).halt(0)
    program.label('otherwise')
    program.simulate_known(0, otherwise, 1, scratch=2)
    return program.halt(0).code()
