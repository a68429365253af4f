# -*- coding: utf-8 -*-

"""
Random material for the checks.

Random programs are short, use few registers and jump only forward,
so every one of them halts on every input.
"""

import random
from typing import List, Tuple

from typing_extensions import Final

from krt_toolkit.basesys.instructions import Opcode
from krt_toolkit.combinators.assembler import Assembler
from krt_toolkit.combinators.stock import (
    constant,
    first,
    identity,
    second,
    successor,
)

#: Registers random programs work with.
_REGISTERS: Final = 3

#: Longest random program body.
_MAX_LENGTH: Final = 8

#: Largest constant a random ``SET`` loads.
_MAX_CONSTANT: Final = 20

_OPCODES: Final = (
    Opcode.INC,
    Opcode.DEC,
    Opcode.COPY,
    Opcode.SET,
    Opcode.PAIR,
    Opcode.UNPAIR,
    Opcode.JZ,
    Opcode.NOP,
)


def _register(rng: random.Random) -> int:
    return rng.randrange(_REGISTERS)


def _random_instruction(
    rng: random.Random,
    position: int,
    length: int,
) -> Tuple[Opcode, Tuple[int, ...]]:
    opcode = rng.choice(_OPCODES)
    if opcode == Opcode.JZ and position + 1 < length:
        return opcode, (_register(rng), rng.randrange(position + 1, length))
    if opcode == Opcode.JZ:
        return Opcode.INC, (_register(rng),)
    if opcode in {Opcode.INC, Opcode.DEC}:
        return opcode, (_register(rng),)
    if opcode == Opcode.COPY:
        return opcode, (_register(rng), _register(rng))
    if opcode == Opcode.SET:
        return opcode, (_register(rng), rng.randrange(_MAX_CONSTANT))
    if opcode in {Opcode.PAIR, Opcode.UNPAIR}:
        return opcode, (_register(rng), _register(rng), _register(rng))
    return Opcode.NOP, ()


def random_program(rng: random.Random) -> int:
    """A random program that halts on every input."""
    length = rng.randint(1, _MAX_LENGTH)
    program = Assembler()
    for position in range(length):
        opcode, operands = _random_instruction(rng, position, length)
        program.emit(opcode, *operands)
    return program.code()


def stock_programs() -> List[int]:
    """Small total programs every check may rely on."""
    return [identity(), successor(), constant(7), first(), second()]


def random_programs(rng: random.Random, count: int) -> List[int]:
    """Stock programs first, then random ones, ``count`` in total."""
    programs = stock_programs()[:count]
    while len(programs) < count:
        programs.append(random_program(rng))
    return programs


def random_argument(rng: random.Random, bits: int = 12) -> int:
    """A random natural number below ``2 ** bits``."""
    return rng.getrandbits(bits)
