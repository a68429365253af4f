# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.basesys.outcomes import same_behaviour
from krt_toolkit.combinators.fitting import fit_overhead
from krt_toolkit.combinators.recursion import krt, krt_plain, mixed_rt
from krt_toolkit.combinators.stock import first, identity, second
from krt_toolkit.numcode import bitlen, pair, tuple_encode

BUDGET = 10 ** 6


@pytest.mark.parametrize('argument', [0, 3, 2 ** 50])
def test_quine(machine, argument):
    """Ensures that a task returning its first input makes a quine."""
    quine = krt_plain(first())

    assert machine().run(quine, argument, BUDGET).value == quine


@pytest.mark.parametrize('parameter', [0, 12, 2 ** 33])
def test_fixed_point_input(machine, parameter):
    """Ensures that tasks receive ``⟨self, ⟨parameter, x⟩⟩``."""
    fixed_point = krt(parameter, identity())

    assert machine().run(fixed_point, 9, BUDGET).value == pair(
        fixed_point, pair(parameter, 9),
    )


def test_fixed_point_equation(machine, sample_programs):
    """Ensures that ``φ_q(x) = φ_r(⟨q, ⟨p, x⟩⟩)`` with linear overhead."""
    system = machine()
    samples = []
    for task in sample_programs(12, seed=3):
        for parameter, argument in ((0, 1), (5, 8)):
            fixed_point = krt(parameter, task)
            direct = system.run(
                task, pair(fixed_point, pair(parameter, argument)), BUDGET,
            )
            through = system.run(fixed_point, argument, BUDGET)
            assert same_behaviour(direct, through)
            samples.append((
                through.steps - direct.steps,
                bitlen(fixed_point) + bitlen(parameter) + bitlen(argument),
            ))

    assert fit_overhead(samples) <= 1000


def test_mixed_recursion(machine):
    """Ensures that indices and the delayed program see every code."""
    system = machine()
    built = mixed_rt([first(), identity()], identity())
    first_index, second_index = built.indices
    delayed = built.delayed

    assert system.run(first_index, 5, BUDGET).value == first_index
    assert system.run(second_index, 5, BUDGET).value == tuple_encode(
        [first_index, second_index, delayed, 5], 4,
    )
    produced = system.run(delayed, 7, BUDGET).value
    assert system.run(produced, 9, BUDGET).value == tuple_encode(
        [first_index, second_index, delayed, 7, 9], 5,
    )


def test_delayed_is_total(machine):
    """Ensures that ``c`` only builds codes and always halts."""
    built = mixed_rt([second()], identity())

    for argument in range(5):
        assert machine().run(built.delayed, argument, BUDGET).halted


def test_no_tasks():
    """Ensures that mixed recursion needs tasks."""
    with pytest.raises(ValueError):
        mixed_rt([], identity())
