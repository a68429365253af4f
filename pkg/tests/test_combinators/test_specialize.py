# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.basesys.instructions import PrimitiveId
from krt_toolkit.basesys.outcomes import Halted, same_behaviour
from krt_toolkit.combinators.specialize import smn, split_stored
from krt_toolkit.combinators.stock import diverger, first, identity, successor
from krt_toolkit.numcode import pair

BUDGET = 10 ** 5


@pytest.mark.parametrize('stored', [0, 1, 17, 2 ** 70])
@pytest.mark.parametrize('argument', [0, 5, 2 ** 40])
def test_stored_argument(machine, stored, argument):
    """Ensures that the stored number is paired in front of the input."""
    system = machine()
    specialized = smn(identity(), stored)

    assert system.run(specialized, argument, BUDGET).value == pair(
        stored, argument,
    )
    assert system.run(smn(first(), stored), argument, BUDGET).value == stored


def test_specialized_behaviour(machine, sample_programs):
    """Ensures that ``φ_smn(p, a)(x) = φ_p(⟨a, x⟩)``."""
    system = machine()
    for code in sample_programs(20):
        for stored, argument in ((0, 0), (3, 9), (40, 1)):
            assert same_behaviour(
                system.run(smn(code, stored), argument, BUDGET),
                system.run(code, pair(stored, argument), BUDGET),
            )


def test_abnormal_program(machine):
    """Ensures that abnormal programs specialize to the empty function."""
    outcome = machine().run(smn(3, 1), 0, 100)

    assert not outcome.halted


@pytest.mark.parametrize('code', [identity(), successor(), diverger()])
def test_split_inverts(code):
    """Ensures that ``split_stored`` finds program and stored number."""
    assert split_stored(smn(code, 11)) == pair(code, 11) + 1


@pytest.mark.parametrize('code', [0, 7, identity(), successor()])
def test_split_others(code):
    """Ensures that codes outside the image of ``smn`` give zero."""
    assert split_stored(code) == 0


def test_split_primitive(machine, program):
    """Ensures that the ``SPLIT`` primitive matches the host function."""
    stored = smn(successor(), 4)
    code = program(
        lambda assembler: assembler.ext(PrimitiveId.SPLIT, 0, 0).halt(0),
    )
    outcome = machine().run(code, stored, BUDGET)

    assert isinstance(outcome, Halted)
    assert outcome.value == split_stored(stored)
