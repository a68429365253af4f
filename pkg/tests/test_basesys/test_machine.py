# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.basesys.instructions import PrimitiveId
from krt_toolkit.basesys.machine import Machine, blum_cost
from krt_toolkit.basesys.outcomes import (
    AbnormalDivergence,
    Halted,
    OutOfBudget,
    same_behaviour,
)
from krt_toolkit.combinators.stock import (
    constant,
    diverger,
    first,
    identity,
    second,
    successor,
)
from krt_toolkit.constructions import fixed_point_demo
from krt_toolkit.numcode import pair


@pytest.mark.parametrize('code, argument, outcome', [
    (identity(), 42, Halted(42, 1)),
    (successor(), 41, Halted(42, 2)),
    (constant(7), 3, Halted(7, 2)),
    (first(), pair(5, 9), Halted(5, 2)),
    (second(), pair(5, 9), Halted(9, 2)),
    (diverger(), 0, OutOfBudget(10)),
    (3, 0, AbnormalDivergence()),
])
def test_stock_programs(machine, code, argument, outcome):
    """Ensures that stock programs compute what they are named after."""
    assert machine().run(code, argument, 10) == outcome


@pytest.mark.parametrize('stepwise', [False, True])
def test_budget_boundary(machine, stepwise):
    """Ensures that a run needs exactly its step count as budget."""
    system = machine(stepwise=stepwise)

    assert system.run(successor(), 0, 2) == Halted(1, 2)
    assert system.run(successor(), 0, 1) == OutOfBudget(1)


@pytest.mark.parametrize('stepwise', [False, True])
@pytest.mark.parametrize('budget, outcome', [
    (8, OutOfBudget(8)),
    (9, Halted(7, 9)),
])
def test_nested_runs_are_charged(machine, program, stepwise, budget, outcome):
    """Ensures that a nested run costs its own steps and one dispatch."""
    def write(assembler):
        assembler.set(1, successor()).copy(2, 0)
        assembler.ext(PrimitiveId.SIMULATE, 0, 1).copy(2, 0)
        assembler.ext(PrimitiveId.SIMULATE, 0, 1)

    assert machine(stepwise=stepwise).run(
        program(write), 5, budget,
    ) == outcome


@pytest.mark.parametrize('stepwise', [False, True])
@pytest.mark.parametrize('budget, outcome', [
    (7, OutOfBudget(7)),
    (8, OutOfBudget(8)),
    (9, Halted(6, 9)),
])
def test_repeated_nested_runs(machine, program, stepwise, budget, outcome):
    """Ensures that a remembered nested run is still charged in full."""
    def write(assembler):
        assembler.set(1, successor()).copy(2, 0)
        assembler.ext(PrimitiveId.SIMULATE, 3, 1)
        assembler.ext(PrimitiveId.SIMULATE, 3, 1).halt(3)

    assert machine(stepwise=stepwise).run(
        program(write), 5, budget,
    ) == outcome


def test_runs_share_no_state(machine):
    """Ensures that a run does not change later runs of the machine."""
    system = machine()
    system.run(successor(), 5, 100)

    assert system.run(successor(), 5, 1) == OutOfBudget(1)
    assert system.run(successor(), 5, 2) == Halted(6, 2)
    assert not hasattr(system, '__dict__')


@pytest.mark.parametrize('stepwise', [False, True])
def test_self_simulation_runs_out_of_budget(machine, stepwise):
    """Ensures that a program simulating itself forever is cut by budget."""
    system = machine(stepwise=stepwise)
    demo = fixed_point_demo(system, identity(), 10 ** 4)

    assert system.run(demo.p0, 0, 10 ** 6) == OutOfBudget(10 ** 6)


def test_running_past_the_end(machine, program):
    """Ensures that falling off the body halts with the first register."""
    code = program(lambda assembler: assembler.inc(0).inc(0))

    assert machine().run(code, 1, 10) == Halted(3, 2)


def test_decrement_stops_at_zero(machine, program):
    """Ensures that decrementing zero keeps zero."""
    code = program(lambda assembler: assembler.dec(0).dec(0))

    assert machine().run(code, 1, 10) == Halted(0, 2)


@pytest.mark.parametrize('primitive, arguments, value, cost', [
    (PrimitiveId.EQUAL, (4, 4), 1, 3),
    (PrimitiveId.LESS, (5, 4), 0, 3),
    (PrimitiveId.PARITY, (7,), 1, 1),
    (PrimitiveId.POWER, (3, 4), 81, 9),
    (PrimitiveId.PRIME, (4,), 11, 5),
])
def test_arithmetic_primitives(
    machine,
    program,
    primitive,
    arguments,
    value,
    cost,
):
    """Ensures that primitives compute and charge as declared."""
    def write(assembler):
        for offset, number in enumerate(arguments):
            assembler.set(1 + offset, number)
        assembler.ext(primitive, 0, 1).halt(0)

    outcome = machine().run(program(write), 0, 100)

    assert outcome == Halted(value, len(arguments) + 2 + cost)


def test_prime_is_charged_first(machine, program):
    """Ensures that an unaffordable primitive is never computed."""
    code = program(
        lambda assembler: assembler.set(1, 10 ** 12).ext(
            PrimitiveId.PRIME, 0, 1,
        ),
    )

    assert machine().run(code, 0, 100) == OutOfBudget(100)


@pytest.mark.parametrize('code, argument', [
    (successor(), 9),
    (diverger(), 9),
    (5, 9),
])
def test_blum_cost(machine, code, argument):
    """Ensures that the measure is the step count of halted runs."""
    system = machine()
    outcome = system.run(code, argument, 50)
    cost = blum_cost(system, code, argument, 50)

    if isinstance(outcome, Halted):
        assert cost == outcome.steps
    else:
        assert cost == outcome


def test_missing_primitives():
    """Ensures that machines need every primitive."""
    with pytest.raises(ValueError):
        Machine({})


def test_negative_numbers(machine):
    """Ensures that runs need natural numbers."""
    with pytest.raises(ValueError):
        machine().run(identity(), -1, 10)


@pytest.mark.parametrize('left, right, same', [
    (Halted(1, 5), Halted(1, 9), True),
    (Halted(1, 5), Halted(2, 5), False),
    (OutOfBudget(3), AbnormalDivergence(), True),
    (Halted(1, 5), OutOfBudget(3), False),
])
def test_same_behaviour(left, right, same):
    """Ensures that behaviour ignores step counts and kinds of divergence."""
    assert same_behaviour(left, right) is same
