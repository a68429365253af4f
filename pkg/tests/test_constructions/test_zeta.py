# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.combinators.stock import constant, first, successor
from krt_toolkit.constructions import (
    Clause,
    compose,
    literal_w,
    literal_w_prime,
    witness_preimage,
    zeta_clause,
)
from krt_toolkit.constructions.zeta import diagonal_value
from krt_toolkit.numcode import pair

#: Explored range of the literal evaluators.
LIMIT = 12


def _helper_outputs(system, helper):
    return [
        system.machine.run(
            system.auxiliary[helper], number, system.budget,
        ).value
        for number in range(LIMIT)
    ]


@pytest.mark.parametrize(('outer', 'inner'), [
    (successor(), successor()),
    (constant(7), successor()),
    (successor(), first()),
])
@pytest.mark.parametrize('argument', [0, 3, 10])
def test_compose(silent_zeta, outer, inner, argument):
    """Ensures that ``w`` builds programs for the composition."""
    composed = compose(silent_zeta, outer, inner)
    middle = silent_zeta.evaluate(inner, argument).value

    assert silent_zeta.evaluate(composed, argument).value == (
        silent_zeta.evaluate(outer, middle).value
    )


def test_associativity(silent_zeta):
    """Ensures that both bracketings give the same program number."""
    first_factor, second_factor, third_factor = (
        successor(), constant(7), first(),
    )

    assert compose(
        silent_zeta,
        compose(silent_zeta, first_factor, second_factor),
        third_factor,
    ) == compose(
        silent_zeta,
        first_factor,
        compose(silent_zeta, second_factor, third_factor),
    )


def test_witness_preimage(silent_zeta):
    """Ensures that composed programs are traced back to their factors."""
    composed = compose(silent_zeta, successor(), first())

    assert witness_preimage(silent_zeta, composed) == pair(
        successor(), first(),
    )
    assert witness_preimage(silent_zeta, successor()) is None
    assert witness_preimage(silent_zeta, composed + 2) is None


def test_literal_w_prime(silent_zeta):
    """Ensures that the literal ``w′`` agrees with the machine."""
    outputs = literal_w_prime(silent_zeta, LIMIT)

    assert outputs == _helper_outputs(silent_zeta, 'w_prime')
    assert outputs == sorted(set(outputs))
    for number, output in enumerate(outputs):
        assert output > number
        assert output % 2 == 0


def test_literal_w(silent_zeta):
    """Ensures that the literal ``w`` agrees with the machine."""
    table = literal_w(silent_zeta, literal_w_prime(silent_zeta, LIMIT))

    assert list(table.outputs) == _helper_outputs(silent_zeta, 'w')
    assert all(output % 2 == 0 for output in table.outputs)


@pytest.mark.parametrize('program', [0, 1, 2])
@pytest.mark.parametrize('argument', [3, 4, 5])
def test_scripted_diagonal(scripted_zeta, program, argument):
    """Ensures that proven ``ζ`` diagonalizes against small programs."""
    outcome = scripted_zeta.evaluate(program, argument)

    assert outcome.value == diagonal_value(program, argument)
    assert zeta_clause(scripted_zeta, program, argument) == Clause.diagonal


def test_scripted_not_yet_proven(scripted_zeta):
    """Ensures that ``ζ`` runs the program below the firing budget."""
    assert scripted_zeta.evaluate(successor(), 2).value == 3
    assert zeta_clause(scripted_zeta, successor(), 2) == Clause.not_proven


def test_scripted_exemptions(scripted_zeta):
    """Ensures that ``w`` and its outputs escape the diagonal."""
    composed = compose(scripted_zeta, 1, 2)

    assert zeta_clause(scripted_zeta, composed, 3) == Clause.exempt
    assert zeta_clause(
        scripted_zeta, scripted_zeta.auxiliary['w'], 3,
    ) == Clause.exempt
    assert scripted_zeta.evaluate(composed, 3).value == diagonal_value(
        1, diagonal_value(2, 3),
    )
