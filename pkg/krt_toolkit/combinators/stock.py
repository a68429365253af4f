# -*- coding: utf-8 -*-

"""Small programs that the constructions and the checks are made of."""

import functools

from krt_toolkit.basesys.instructions import PrimitiveId
from krt_toolkit.combinators.assembler import Assembler


@functools.lru_cache(maxsize=None)
def identity() -> int:
    """``φ(x) = x`` in one step."""
    return Assembler().halt(0).code()


@functools.lru_cache(maxsize=None)
def successor() -> int:
    """``φ(x) = x + 1``."""
    return Assembler().inc(0).halt(0).code()


@functools.lru_cache(maxsize=None)
def constant(number: int) -> int:
    """``φ(x) = number``."""
    return Assembler().set(0, number).halt(0).code()


@functools.lru_cache(maxsize=None)
def diverger() -> int:
    """The everywhere undefined function, written as a normal code."""
    program = Assembler()
    return program.label('loop').jmp('loop').code()


@functools.lru_cache(maxsize=None)
def first() -> int:
    """``φ(⟨a, b⟩) = a``."""
    return Assembler().unpair(0, 1, 0).halt(0).code()


@functools.lru_cache(maxsize=None)
def second() -> int:
    """``φ(⟨a, b⟩) = b``."""
    return Assembler().unpair(1, 0, 0).halt(0).code()


@functools.lru_cache(maxsize=None)
def pad_program() -> int:
    """Computes ``pad`` through its primitive."""
    return Assembler().ext(PrimitiveId.PAD, 0, 0).halt(0).code()


@functools.lru_cache(maxsize=None)
def drop_parameter(task: int) -> int:
    """
    Adapts a parameter free task to the ``krt`` calling convention.

    The result maps ``⟨self, ⟨p, x⟩⟩`` to ``φ_task(⟨self, x⟩)``.
    """
    program = Assembler()
    program.unpair(1, 2, 0).unpair(3, 4, 2).pair(5, 1, 4)
    program.simulate_known(0, task, 5, scratch=6)
    return program.halt(0).code()
