# -*- coding: utf-8 -*-

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krt_toolkit.basesys.encoding import (
    ABNORMAL,
    CODE_MODULUS,
    Normal,
    ProgramBody,
    classify,
    decode_program,
    encode_program,
    format_listing,
)
from krt_toolkit.basesys.instructions import Instruction, Opcode
from krt_toolkit.checks.samples import random_program


@given(st.integers(min_value=0, max_value=2 ** 31))
def test_random_bodies(seed):
    """Ensures that every assembled program decodes and encodes back."""
    code = random_program(random.Random(seed))
    body = decode_program(code)

    assert isinstance(body, ProgramBody)
    assert encode_program(body) == code
    assert code % CODE_MODULUS == 0


@given(st.integers(min_value=0, max_value=2 ** 64))
def test_codes_are_canonical(code):
    """Ensures that every normal code is the code of its own body."""
    decoded = decode_program(code)
    if isinstance(decoded, ProgramBody):
        assert encode_program(decoded) == code
    else:
        assert decoded is ABNORMAL


@pytest.mark.parametrize('code', [0, 1, 2, 3, 5, 7, 9, 12, 8 * 2 + 4])
def test_abnormal_codes(code):
    """Ensures that non-multiples of eight and empty listings are abnormal."""
    assert classify(code) == ABNORMAL


def test_padding_counter():
    """Ensures that the padding counter is kept apart from instructions."""
    body = ProgramBody([Instruction(Opcode.INC, (0,))], padcount=5)
    decoded = decode_program(encode_program(body))

    assert decoded == body
    assert classify(encode_program(body)) == Normal(body)


@pytest.mark.parametrize('instructions', [
    [],
    [Instruction(Opcode.JMP, (1,))],
    [Instruction(Opcode.NOP, ()), Instruction(Opcode.JZ, (0, 7))],
])
def test_invalid_bodies(instructions):
    """Ensures that empty bodies and far jumps are rejected."""
    with pytest.raises(ValueError):
        ProgramBody(instructions)


@pytest.mark.parametrize('opcode, operands', [
    (Opcode.INC, ()),
    (Opcode.HALT, (0, 1)),
    (Opcode.SET, (0, -1)),
    (Opcode.EXT, (99, 0, 0)),
])
def test_invalid_instructions(opcode, operands):
    """Ensures that operands must fit the opcode."""
    with pytest.raises(ValueError):
        Instruction(opcode, operands)


def test_listing():
    """Ensures that listings show one numbered instruction per line."""
    body = ProgramBody([
        Instruction(Opcode.INC, (0,)),
        Instruction(Opcode.HALT, (0,)),
    ])

    assert format_listing(body) == '   0  INC 0\n   1  HALT 0'
