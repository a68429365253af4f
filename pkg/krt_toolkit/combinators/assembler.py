# -*- coding: utf-8 -*-

"""
Label resolving builder for program bodies.

Every program producing operation writes its program with
an :class:`Assembler` instead of raw instruction lists.
Jump targets are written as label names and are resolved
when the body is built.

Conventions
~~~~~~~~~~~

- ``r0`` is the input and the output register
- instruction methods are named after opcodes in lower case
- helpers that expand to several instructions take a ``scratch`` register:
  the first of the consecutive registers they are allowed to overwrite

"""

import itertools
from typing import Dict, List, Sequence, Tuple, Union

from typing_extensions import final

from krt_toolkit.basesys.encoding import ProgramBody, encode_program
from krt_toolkit.basesys.instructions import (
    PRIMITIVE_ARITY,
    Instruction,
    Opcode,
    PrimitiveId,
)

#: Operand that is either a number or a label waiting to be resolved.
_Operand = Union[int, str]


@final
class Assembler(object):
    """Collects instructions and labels, then builds a program body."""

    def __init__(self) -> None:
        """Starts with an empty program."""
        self._pending: List[Tuple[Opcode, Tuple[_Operand, ...]]] = []
        self._labels: Dict[str, int] = {}
        self._counter = itertools.count()

    def __len__(self) -> int:
        """Number of emitted instructions."""
        return len(self._pending)

    def fresh(self, prefix: str) -> str:
        """Returns a label name that was never used before."""
        return '{0}.{1}'.format(prefix, next(self._counter))

    def label(self, name: str) -> 'Assembler':
        """Marks the position of the next instruction."""
        if name in self._labels:
            raise ValueError('Label is defined twice: {0}'.format(name))
        self._labels[name] = len(self._pending)
        return self

    def emit(self, opcode: Opcode, *operands: _Operand) -> 'Assembler':
        """Appends one instruction."""
        self._pending.append((opcode, operands))
        return self

    def halt(self, register: int) -> 'Assembler':
        return self.emit(Opcode.HALT, register)

    def inc(self, register: int) -> 'Assembler':
        return self.emit(Opcode.INC, register)

    def dec(self, register: int) -> 'Assembler':
        return self.emit(Opcode.DEC, register)

    def copy(self, destination: int, source: int) -> 'Assembler':
        return self.emit(Opcode.COPY, destination, source)

    def jz(self, register: int, target: str) -> 'Assembler':
        return self.emit(Opcode.JZ, register, target)

    def jmp(self, target: str) -> 'Assembler':
        return self.emit(Opcode.JMP, target)

    def pair(self, destination: int, first: int, second: int) -> 'Assembler':
        return self.emit(Opcode.PAIR, destination, first, second)

    def unpair(self, first: int, second: int, source: int) -> 'Assembler':
        return self.emit(Opcode.UNPAIR, first, second, source)

    def set(self, register: int, number: int) -> 'Assembler':  # noqa: A003
        return self.emit(Opcode.SET, register, number)

    def ext(
        self,
        primitive: PrimitiveId,
        destination: int,
        source: int,
    ) -> 'Assembler':
        return self.emit(Opcode.EXT, int(primitive), destination, source)

    def nop(self) -> 'Assembler':
        return self.emit(Opcode.NOP)

    def call(
        self,
        primitive: PrimitiveId,
        destination: int,
        arguments: Sequence[int],
        scratch: int,
    ) -> 'Assembler':
        """
        Copies argument registers next to each other and calls a primitive.

        Registers ``scratch`` onwards are overwritten.
        """
        if len(arguments) != PRIMITIVE_ARITY[primitive]:
            raise ValueError('{0} takes {1} arguments, got: {2}'.format(
                primitive.name, PRIMITIVE_ARITY[primitive], len(arguments),
            ))
        for offset, register in enumerate(arguments):
            self.copy(scratch + offset, register)
        return self.ext(primitive, destination, scratch)

    def simulate(
        self,
        destination: int,
        program: int,
        argument: int,
        scratch: int,
    ) -> 'Assembler':
        """Emits ``destination := φ_program(argument)`` for registers."""
        return self.call(
            PrimitiveId.SIMULATE, destination, (program, argument), scratch,
        )

    def simulate_known(
        self,
        destination: int,
        code: int,
        argument: int,
        scratch: int,
    ) -> 'Assembler':
        """Same as :meth:`simulate`, but the program is a fixed code."""
        self.set(scratch, code)
        self.copy(scratch + 1, argument)
        return self.ext(PrimitiveId.SIMULATE, destination, scratch)

    def body(self, padcount: int = 0) -> ProgramBody:
        """
        Resolves labels and returns the program body.

        Raises:
            ValueError: when a label is missing or the body is invalid.

        """
        instructions = []
        for opcode, operands in self._pending:
            instructions.append(Instruction(
                opcode, tuple(self._resolve(operand) for operand in operands),
            ))
        return ProgramBody(instructions, padcount)

    def code(self, padcount: int = 0) -> int:
        """Builds the body and returns its code."""
        return encode_program(self.body(padcount))

    def _resolve(self, operand: _Operand) -> int:
        if isinstance(operand, int):
            return operand
        try:
            return self._labels[operand]
        except KeyError:
            raise ValueError('Unknown label: {0}'.format(operand))
