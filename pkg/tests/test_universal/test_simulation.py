# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.basesys.outcomes import AbnormalDivergence, Halted, OutOfBudget
from krt_toolkit.combinators.control import comp_m
from krt_toolkit.combinators.stock import diverger, identity, successor
from krt_toolkit.numcode import pair
from krt_toolkit.universal import (
    UNIVERSAL_OVERHEAD,
    Mode,
    compare_modes,
    simulate,
    universal_code,
)


@pytest.mark.parametrize('code, argument', [
    (identity(), 4),
    (successor(), 0),
    (comp_m(successor(), [successor()]), 3),
])
def test_universal_program(machine, code, argument):
    """Ensures that ``φ_u(⟨p, x⟩) = φ_p(x)`` with a constant overhead."""
    system = machine()
    direct = system.run(code, argument, 1000)
    universal = system.run(universal_code(), pair(code, argument), 1000)

    assert isinstance(universal, Halted)
    assert universal.value == direct.value
    assert universal.steps == direct.steps + UNIVERSAL_OVERHEAD


@pytest.mark.parametrize('code, argument, outcome', [
    (successor(), 1, Halted(2, 2)),
    (diverger(), 1, OutOfBudget(50)),
    (5, 1, AbnormalDivergence()),
])
@pytest.mark.parametrize('mode', list(Mode))
def test_modes(machine, code, argument, outcome, mode):
    """Ensures that both modes give the same outcomes."""
    assert simulate(machine(), code, argument, 50, mode=mode) == outcome


def test_modes_agree(machine, sample_programs):
    """Ensures that nested simulations agree step by step."""
    system = machine()
    nested = comp_m(identity(), sample_programs(8))
    for argument in range(5):
        assert compare_modes(system, nested, argument, 10 ** 5)
    for code in sample_programs(30, seed=5):
        assert compare_modes(system, code, 17, 1000)
