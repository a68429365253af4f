# -*- coding: utf-8 -*-

"""
Numbering of register machine programs.

A program body is written as a bit string: the leader ``11``
followed by the self-delimiting codes of every opcode and operand.
Reading that bit string as a binary number gives the listing number ``L``.

The program code is ``8 * ⟨L, padcount⟩``.
So every normal code is divisible by eight,
and the padding counter can grow without touching the instructions.
Any number that does not decode this way is abnormal.
"""

import functools
from typing import List, Sequence, Tuple, Union

import attr
from typing_extensions import Final, final

from krt_toolkit.basesys.instructions import ARITY, Instruction, Opcode
from krt_toolkit.numcode import decode_delta, encode_delta, pair, unpair

#: Every normal code is a multiple of this number.
CODE_MODULUS: Final = 8

#: Bits that start every listing.
_LEADER: Final = '11'


@final
@attr.dataclass(frozen=True, slots=True)
class ProgramBody(object):
    """
    Decoded program: a non-empty instruction sequence and a padding counter.

    The padding counter has no effect on what the program computes.
    """

    instructions: Tuple[Instruction, ...] = attr.ib(converter=tuple)
    padcount: int = 0

    def __attrs_post_init__(self) -> None:
        """Checks that the body can be executed."""
        if not self.instructions:
            raise ValueError('Program body must not be empty')
        if self.padcount < 0:
            raise ValueError('Negative padding counter: {0}'.format(
                self.padcount,
            ))
        size = len(self.instructions)
        for instruction in self.instructions:
            target = instruction.target
            if target is not None and target >= size:
                raise ValueError('Jump outside of the program: {0}'.format(
                    instruction,
                ))

    @property
    def width(self) -> int:
        """Number of registers the body needs."""
        return 1 + max(
            register
            for instruction in self.instructions
            for register in (*instruction.registers(), 0)
        )

    def padded(self, extra: int = 1) -> 'ProgramBody':
        """Returns the same instructions with a larger padding counter."""
        return attr.evolve(self, padcount=self.padcount + extra)


@final
@attr.dataclass(frozen=True, slots=True)
class Normal(object):
    """Code that decodes into a program body."""

    body: ProgramBody


@final
@attr.dataclass(frozen=True, slots=True)
class Abnormal(object):
    """Code that names no instructions, it diverges everywhere."""


#: The only abnormal marker we use.
ABNORMAL: Final = Abnormal()

#: Result of classification.
CodeClass = Union[Normal, Abnormal]


def encode_listing(instructions: Sequence[Instruction]) -> int:
    """Returns the listing number of an instruction sequence."""
    parts = [_LEADER]
    for instruction in instructions:
        parts.append(encode_delta(instruction.opcode))
        parts.extend(encode_delta(operand) for operand in instruction.operands)
    return int(''.join(parts), 2)


def encode_program(body: ProgramBody) -> int:
    """
    Returns the normal code of a program body.

    >>> from krt_toolkit.basesys.instructions import Instruction, Opcode
    >>> halt = ProgramBody([Instruction(Opcode.HALT, (0,))])
    >>> decode_program(encode_program(halt)) == halt
    True

    """
    listing = encode_listing(body.instructions)
    return CODE_MODULUS * pair(listing, body.padcount)


def _parse_listing(listing: int) -> List[Instruction]:
    bits = format(listing, 'b')
    if not bits.startswith(_LEADER):
        raise ValueError('Listing does not start with the leader')
    position = len(_LEADER)
    instructions = []
    while position < len(bits):
        opcode_number, position = decode_delta(bits, position)
        opcode = Opcode(opcode_number)
        operands = []
        for _ in range(ARITY[opcode]):
            operand, position = decode_delta(bits, position)
            operands.append(operand)
        instructions.append(Instruction(opcode, tuple(operands)))
    return instructions


@functools.lru_cache(maxsize=4096)
def decode_program(code: int) -> Union[ProgramBody, Abnormal]:
    """
    Decodes a program code, abnormal codes give :data:`ABNORMAL`.

    >>> decode_program(3)
    Abnormal()

    """
    if code < 0:
        raise ValueError('Program codes are natural, got: {0}'.format(code))
    if code % CODE_MODULUS:
        return ABNORMAL
    listing, padcount = unpair(code // CODE_MODULUS)
    try:
        return ProgramBody(_parse_listing(listing), padcount)
    except ValueError:
        return ABNORMAL


def classify(code: int) -> CodeClass:
    """
    Tells normal codes from abnormal ones.

    >>> classify(1), classify(2)
    (Abnormal(), Abnormal())

    """
    decoded = decode_program(code)
    if isinstance(decoded, ProgramBody):
        return Normal(decoded)
    return ABNORMAL


def format_listing(body: ProgramBody) -> str:
    """Returns one numbered instruction per line."""
    return '\n'.join(
        '{0:>4}  {1}'.format(index, instruction)
        for index, instruction in enumerate(body.instructions)
    )
