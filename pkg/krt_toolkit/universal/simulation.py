# -*- coding: utf-8 -*-

"""
Universal simulation inside the base system.

The universal program is two instructions long:
it splits its input ``⟨p, x⟩`` and hands both halves
to the simulation primitive.
So ``φ_u(⟨p, x⟩) = φ_p(x)`` holds by construction,
and the mode conformance checks guard that the shortcut is invisible.
"""

import enum
import functools

from typing_extensions import Final, final

from krt_toolkit.basesys.encoding import (
    Abnormal,
    ProgramBody,
    classify,
    encode_program,
)
from krt_toolkit.basesys.instructions import Instruction, Opcode, PrimitiveId
from krt_toolkit.basesys.machine import Machine
from krt_toolkit.basesys.outcomes import Halted, OutOfBudget, RunOutcome
from krt_toolkit.basesys.primitives import Arguments, Primitive, Subrun
from krt_toolkit.numcode import pair

#: Steps the universal program spends on top of the simulated run.
UNIVERSAL_OVERHEAD: Final = 2


@final
class Mode(enum.Enum):
    """How :func:`simulate` executes a program."""

    accelerated = 'accelerated'
    pure = 'pure'


@functools.lru_cache(maxsize=None)
def universal_code() -> int:
    """
    Returns the code ``u`` with ``φ_u(⟨p, x⟩) = φ_p(x)``.

    Running past the last instruction halts with ``r0``,
    so the program does not need a final ``HALT``.
    """
    return encode_program(ProgramBody([
        Instruction(Opcode.UNPAIR, (1, 2, 0)),
        Instruction(Opcode.EXT, (PrimitiveId.SIMULATE, 0, 1)),
    ]))


def _simulate(
    machine: Machine,
    arguments: Arguments,
    allowance: int,
) -> Subrun:
    program, argument = arguments
    return Subrun(program, argument)


def simulation_primitive() -> Primitive:
    """
    The ``SIMULATE`` primitive: ``φ_p(x)`` charged with its own steps.

    The machine runs the nested program on its frame stack.
    A nested run that does not halt within the allowance
    makes the calling run go out of budget.
    """
    return Primitive(PrimitiveId.SIMULATE, _simulate)


def simulate(
    machine: Machine,
    program: int,
    argument: int,
    budget: int,
    mode: Mode = Mode.accelerated,
) -> RunOutcome:
    """
    Runs ``program`` on ``argument`` in the requested mode.

    The accelerated mode calls the machine directly.
    The pure mode runs ``u`` on ``⟨p, x⟩`` with the stepwise interpreter,
    every nested simulation included.
    Step counts of the pure mode are reported without the overhead of ``u``.
    """
    if mode == Mode.accelerated:
        return machine.run(program, argument, budget)

    if isinstance(classify(program), Abnormal):
        return machine.run(program, argument, budget)
    outcome = machine.stepwise_twin().run(
        universal_code(),
        pair(program, argument),
        budget + UNIVERSAL_OVERHEAD,
    )
    if isinstance(outcome, Halted):
        return Halted(outcome.value, outcome.steps - UNIVERSAL_OVERHEAD)
    return OutOfBudget(budget)


def compare_modes(
    machine: Machine,
    program: int,
    argument: int,
    budget: int,
) -> bool:
    """
    Whether both modes agree on a run, step counts included.

    >>> from krt_toolkit.system import build_system
    >>> from krt_toolkit.combinators.stock import successor
    >>> compare_modes(build_system(), successor(), 3, 100)
    True

    """
    accelerated = simulate(machine, program, argument, budget)
    pure = simulate(machine, program, argument, budget, mode=Mode.pure)
    return accelerated == pure or (
        not accelerated.halted and not pure.halted
    )
