# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.basesys.outcomes import Halted
from krt_toolkit.combinators.stock import identity, successor
from krt_toolkit.constructions import (
    Clause,
    diagonal_clause,
    diagonal_sentence,
    eta_build,
    psi_build,
    theta_build,
)
from krt_toolkit.logic.oracles import make_silent
from krt_toolkit.logic.sentences import SystemKind, Template
from krt_toolkit.numcode import pair

BUDGET = 10 ** 6

builders = pytest.mark.parametrize('build', [
    psi_build,
    eta_build,
    theta_build,
])


@builders
def test_silent_transparency(build, sample_programs):
    """Ensures that derived systems agree with φ when nothing is proven."""
    system = build(make_silent(), BUDGET)
    for program in sample_programs(5):
        for argument in range(3):
            derived = system.evaluate(program, argument)
            direct = system.machine.run(program, argument, BUDGET)

            assert isinstance(derived, Halted)
            assert derived.value == direct.value
            assert diagonal_clause(system, program, argument) != (
                Clause.diagonal
            )


@pytest.mark.parametrize(('build', 'template', 'kind'), [
    (psi_build, Template.EXISTS_DISTINCT_EQUIV, SystemKind.PSI),
    (theta_build, Template.EXISTS_UNIVERSAL, SystemKind.THETA),
])
def test_scripted_diagonal(diagonal_oracle, build, template, kind):
    """Ensures that the system outputs the program once proven."""
    system = build(diagonal_oracle(template, kind), BUDGET)
    program = successor()

    assert system.evaluate(program, 2).value == 3
    assert diagonal_clause(system, program, 2) == Clause.not_proven
    for argument in (3, 4, 7):
        assert system.evaluate(program, argument).value == program
        assert diagonal_clause(system, program, argument) == (
            Clause.diagonal
        )


def test_eta_own_code(diagonal_oracle):
    """Ensures that ``η`` runs its own code as a plain program."""
    system = eta_build(diagonal_oracle(
        Template.EXISTS_DISTINCT_EQUIV, SystemKind.ETA,
    ), BUDGET)
    own = system.defining_code

    assert diagonal_clause(system, own, 4) == Clause.exempt
    assert system.evaluate(own, pair(successor(), 5)).value == successor()
    assert system.evaluate(own, pair(successor(), 2)).value == 3
    assert system.evaluate(identity(), 4).value == identity()


@builders
def test_diagonal_sentence(build):
    """Ensures that the sentence names the system by its defining code."""
    system = build(make_silent())
    sentence = diagonal_sentence(system)

    assert sentence.system == system.tag
    assert sentence.arguments == ()
    assert system.codes() == {'e': system.defining_code}


def test_zeta_has_no_diagonal_sentence(silent_zeta):
    """Ensures that ``ζ`` is rejected by the three-system helpers."""
    with pytest.raises(ValueError):
        diagonal_sentence(silent_zeta)
