# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.basesys.outcomes import Halted, OutOfBudget
from krt_toolkit.combinators.stock import (
    constant,
    diverger,
    identity,
    successor,
)
from krt_toolkit.constructions import (
    Clause,
    fixed_point_demo,
    theorem1_candidates,
)
from krt_toolkit.logic.oracles import scripted_from
from krt_toolkit.logic.patterns import SentencePattern
from krt_toolkit.logic.sentences import SystemKind, Template
from krt_toolkit.numcode import set_decode
from krt_toolkit.universal import verify_certificate

BUDGET = 10 ** 6


@pytest.fixture(scope='module')
def fired_candidates():
    """Candidates for the successor whose equivalence is proven at 2."""
    program = successor()
    return theorem1_candidates(program, scripted_from([(
        SentencePattern(Template.EQUIV, SystemKind.PHI, None, (None, program)),
        2,
    )]))


def test_silent_candidates():
    """Ensures that both candidates behave like the program when silent."""
    candidates = theorem1_candidates(successor())

    assert set_decode(candidates.g_code.code) == {
        candidates.e1, candidates.e2,
    }
    for candidate in (candidates.e1, candidates.e2):
        for argument in range(4):
            outcome = candidates.machine.run(candidate, argument, BUDGET)
            assert outcome.value == argument + 1
            assert candidates.clause(candidate, argument) == (
                Clause.not_proven
            )


@pytest.mark.parametrize('argument', [0, 1, 2, 5])
def test_fired_candidates(fired_candidates, argument):
    """Ensures that ``e1`` adds one and ``e2`` gives zero once fired."""
    fired = argument >= 2
    first = fired_candidates.machine.run(fired_candidates.e1, argument, BUDGET)
    second = fired_candidates.machine.run(
        fired_candidates.e2, argument, BUDGET,
    )

    assert first.value == argument + (2 if fired else 1)
    assert second.value == (0 if fired else argument + 1)
    for candidate, outcome in (
        (fired_candidates.e1, first),
        (fired_candidates.e2, second),
    ):
        assert fired_candidates.expected_value(
            candidate, argument, BUDGET,
        ) == outcome.value


def test_candidate_sentences(fired_candidates):
    """Ensures that each candidate asks about its own code."""
    sentence = fired_candidates.sentence(fired_candidates.e1)

    assert sentence.arguments == (fired_candidates.e1, successor())
    assert fired_candidates.clause(fired_candidates.e2, 2) == (
        Clause.diagonal
    )


def test_not_a_candidate(fired_candidates):
    """Ensures that other programs have no defining clauses."""
    with pytest.raises(ValueError):
        fired_candidates.expected_value(identity(), 0, BUDGET)


def test_fixed_point_of_a_constant(machine):
    """Ensures that ``φ_p0 = φ_φd(p0)`` when ``d`` ignores its input."""
    system = machine()
    demo = fixed_point_demo(system, constant(successor()), BUDGET)

    assert demo.q0 == Halted(successor(), 2)
    assert demo.certificate is not None
    assert verify_certificate(system, demo.certificate)
    assert demo.sentence.arguments == (demo.d, demo.p0, successor())
    for argument in range(5):
        assert system.run(demo.p0, argument, BUDGET).value == argument + 1


def test_fixed_point_of_identity(machine):
    """Ensures that the fixed point of the identity is certified."""
    system = machine()
    demo = fixed_point_demo(system, identity(), BUDGET)

    assert demo.certificate.value == demo.p0
    assert verify_certificate(system, demo.certificate)


def test_fixed_point_without_certificate(machine):
    """Ensures that a diverging ``d`` gives no certificate."""
    demo = fixed_point_demo(machine(), diverger(), 100)

    assert isinstance(demo.q0, OutOfBudget)
    assert demo.certificate is None
    assert demo.sentence is None
