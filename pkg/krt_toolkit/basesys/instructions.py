# -*- coding: utf-8 -*-

"""
Instruction set of the base register machine.

Registers hold natural numbers of any size.
Execution starts with the input in ``r0`` and zero everywhere else.

.. list-table::
   :header-rows: 1

   * - Instruction
     - Meaning
   * - ``HALT r``
     - stop, the output is ``r``
   * - ``INC r`` / ``DEC r``
     - add one / subtract one, stopping at zero
   * - ``COPY d s``
     - ``d := s``
   * - ``JZ r t`` / ``JMP t``
     - jump to instruction ``t`` when ``r`` is zero / always
   * - ``PAIR d a b``
     - ``d := ⟨a, b⟩``
   * - ``UNPAIR a b s``
     - ``(a, b) := unpair(s)``
   * - ``SET r n``
     - ``r := n``
   * - ``EXT k d s``
     - ``d := primitive_k(s, s + 1, …)``
   * - ``NOP``
     - nothing

Running past the last instruction halts with ``r0``.
"""

import enum
from typing import Dict, Optional, Tuple

import attr
from typing_extensions import Final, final


@final
class Opcode(enum.IntEnum):
    """Operation codes, their numbers are part of the program numbering."""

    HALT = 0
    INC = 1
    DEC = 2
    COPY = 3
    JZ = 4
    JMP = 5
    PAIR = 6
    UNPAIR = 7
    SET = 8
    EXT = 9
    NOP = 10


@final
class PrimitiveId(enum.IntEnum):
    """Host primitives that ``EXT`` may invoke."""

    SIMULATE = 0
    ORACLE = 1
    QUOTE = 2
    STORE = 3
    SPLIT = 4
    PAD = 5
    EQUAL = 6
    LESS = 7
    PARITY = 8
    POWER = 9
    PRIME = 10


#: Number of operands of each instruction.
ARITY: Final[Dict[Opcode, int]] = {
    Opcode.HALT: 1,
    Opcode.INC: 1,
    Opcode.DEC: 1,
    Opcode.COPY: 2,
    Opcode.JZ: 2,
    Opcode.JMP: 1,
    Opcode.PAIR: 3,
    Opcode.UNPAIR: 3,
    Opcode.SET: 2,
    Opcode.EXT: 3,
    Opcode.NOP: 0,
}

#: Number of consecutive argument registers each primitive reads.
PRIMITIVE_ARITY: Final[Dict[PrimitiveId, int]] = {
    PrimitiveId.SIMULATE: 2,
    PrimitiveId.ORACLE: 2,
    PrimitiveId.QUOTE: 6,
    PrimitiveId.STORE: 2,
    PrimitiveId.SPLIT: 1,
    PrimitiveId.PAD: 1,
    PrimitiveId.EQUAL: 2,
    PrimitiveId.LESS: 2,
    PrimitiveId.PARITY: 1,
    PrimitiveId.POWER: 2,
    PrimitiveId.PRIME: 1,
}

#: Which operand holds the jump target.
_TARGET_OPERAND: Final[Dict[Opcode, int]] = {
    Opcode.JZ: 1,
    Opcode.JMP: 0,
}


@final
@attr.dataclass(frozen=True, slots=True)
class Instruction(object):
    """
    One instruction: an opcode with its operands.

    Raises:
        ValueError: when operands do not fit the opcode.

    """

    opcode: Opcode = attr.ib(converter=Opcode)
    operands: Tuple[int, ...] = attr.ib(default=(), converter=tuple)

    def __attrs_post_init__(self) -> None:
        """Checks the operands against the opcode."""
        if len(self.operands) != ARITY[self.opcode]:
            raise ValueError('{0} takes {1} operands, got: {2}'.format(
                self.opcode.name, ARITY[self.opcode], self.operands,
            ))
        if any(operand < 0 for operand in self.operands):
            raise ValueError('Negative operand in {0}'.format(self.operands))
        if self.opcode == Opcode.EXT:
            PrimitiveId(self.operands[0])  # raises ValueError

    @property
    def target(self) -> Optional[int]:
        """Jump target of the instruction, if it has one."""
        position = _TARGET_OPERAND.get(self.opcode)
        if position is None:
            return None
        return self.operands[position]

    def registers(self) -> Tuple[int, ...]:
        """All registers that the instruction may touch."""
        if self.opcode == Opcode.EXT:
            primitive, destination, source = self.operands
            span = PRIMITIVE_ARITY[PrimitiveId(primitive)]
            return (destination, *range(source, source + span))
        if self.opcode == Opcode.SET:
            return self.operands[:1]
        position = _TARGET_OPERAND.get(self.opcode)
        return tuple(
            operand
            for index, operand in enumerate(self.operands)
            if index != position
        )

    def relocated(self, offset: int) -> 'Instruction':
        """Returns the same instruction with its jump target shifted."""
        position = _TARGET_OPERAND.get(self.opcode)
        if position is None:
            return self
        operands = list(self.operands)
        operands[position] += offset
        return Instruction(self.opcode, tuple(operands))

    def __str__(self) -> str:
        """Assembly-like listing of the instruction."""
        parts = [self.opcode.name]
        operands = list(self.operands)
        if self.opcode == Opcode.EXT:
            parts.append(PrimitiveId(operands.pop(0)).name.lower())
        parts.extend(str(operand) for operand in operands)
        return ' '.join(parts)
