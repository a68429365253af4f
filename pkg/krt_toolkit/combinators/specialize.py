# -*- coding: utf-8 -*-

"""
S-m-n: storing an argument inside a program code.

``smn(p, a)`` puts a three instruction prologue in front of ``p``::

    SET 1 a
    PAIR 0 1 0
    SET 1 0

The prologue turns the input ``x`` into ``⟨a, x⟩`` and clears ``r1``,
then the instructions of ``p`` run unchanged, with jumps shifted by three.
The program ``p`` is never executed while the code is built.

The prologue is easy to recognize,
so :func:`split_stored` inverts ``smn`` on its image.
"""

import functools
from typing import List, Optional, Tuple

from typing_extensions import Final

from krt_toolkit.basesys.encoding import (
    ProgramBody,
    decode_program,
    encode_program,
)
from krt_toolkit.basesys.instructions import Instruction, Opcode, PrimitiveId
from krt_toolkit.basesys.primitives import Primitive, total_primitive
from krt_toolkit.numcode import bitlen, pair

#: Number of instructions ``smn`` adds in front of a program.
PROLOGUE_SIZE: Final = 3

#: What ``smn`` uses in place of an abnormal program.
_DIVERGER: Final = (Instruction(Opcode.JMP, (0,)),)


def _prologue(stored: int) -> Tuple[Instruction, ...]:
    return (
        Instruction(Opcode.SET, (1, stored)),
        Instruction(Opcode.PAIR, (0, 1, 0)),
        Instruction(Opcode.SET, (1, 0)),
    )


@functools.lru_cache(maxsize=4096)
def smn(program: int, stored: int) -> int:
    """
    Returns a normal code ``q`` with ``φ_q(x) = φ_p(⟨a, x⟩)``.

    The padding counter of ``p`` is dropped, it has no meaning.
    Abnormal ``p`` compute the empty function, so does the result.
    """
    body = decode_program(program)
    if isinstance(body, ProgramBody):
        tail = tuple(
            instruction.relocated(PROLOGUE_SIZE)
            for instruction in body.instructions
        )
    else:
        tail = tuple(
            instruction.relocated(PROLOGUE_SIZE) for instruction in _DIVERGER
        )
    return encode_program(ProgramBody(_prologue(stored) + tail))


def _stored_parts(code: int) -> Optional[Tuple[int, int]]:
    body = decode_program(code)
    if not isinstance(body, ProgramBody) or body.padcount:
        return None
    instructions = body.instructions
    if len(instructions) <= PROLOGUE_SIZE:
        return None
    head = instructions[:PROLOGUE_SIZE]
    if head[0].opcode != Opcode.SET:
        return None
    stored = head[0].operands[-1]
    if head != _prologue(stored):
        return None
    rest: List[Instruction] = []
    for instruction in instructions[PROLOGUE_SIZE:]:
        target = instruction.target
        if target is not None and target < PROLOGUE_SIZE:
            return None
        rest.append(instruction.relocated(-PROLOGUE_SIZE))
    return encode_program(ProgramBody(rest)), stored


def split_stored(code: int) -> int:
    """
    Inverts :func:`smn` on its image.

    Returns ``⟨p, a⟩ + 1`` when ``code`` is ``smn(p, a)`` for a normal ``p``
    without padding, and ``0`` for every other number.
    """
    parts = _stored_parts(code)
    if parts is None:
        return 0
    return pair(*parts) + 1


def specialize_primitives() -> List[Primitive]:
    """The ``STORE`` and ``SPLIT`` primitives."""
    return [
        total_primitive(
            PrimitiveId.STORE,
            smn,
            lambda program, stored: bitlen(program) + bitlen(stored),
        ),
        total_primitive(PrimitiveId.SPLIT, split_stored, bitlen),
    ]
