# -*- coding: utf-8 -*-

"""
Sentences, oracles, and the constructions that consult them.

The silent oracle must leave every derived system equal to ``φ``.
Scripted oracles fire from :data:`FIRING_BUDGET` on,
so every diagonal clause gets executed.
"""

from typing import Callable, List, Tuple

from typing_extensions import Final, final

from krt_toolkit.basesys.outcomes import Halted, same_behaviour
from krt_toolkit.checks.base import (
    BaseSuite,
    Verdict,
    detail,
    first_failure,
)
from krt_toolkit.checks.samples import random_argument, random_programs
from krt_toolkit.combinators.stock import identity, pad_program, successor
from krt_toolkit.constructions.base import Clause, DerivedSystem
from krt_toolkit.constructions.diagonal import (
    fixed_point_demo,
    theorem1_candidates,
)
from krt_toolkit.constructions.systems import (
    DIAGONAL_TEMPLATES,
    diagonal_clause,
    eta_build,
    psi_build,
    theta_build,
)
from krt_toolkit.logic.numerals import parse_numeral, render_numeral
from krt_toolkit.logic.oracles import (
    Oracle,
    make_silent,
    oracle_query,
    scripted_from,
)
from krt_toolkit.logic.patterns import SentencePattern
from krt_toolkit.logic.sentences import (
    PHI,
    TEMPLATE_ARITY,
    Sentence,
    SystemKind,
    SystemTag,
    Template,
    parse_sentence,
)
from krt_toolkit.numcode import pair, set_decode
from krt_toolkit.options import defaults
from krt_toolkit.system import build_system
from krt_toolkit.universal.certificates import verify_certificate

#: Budget from which scripted oracles fire.
FIRING_BUDGET: Final = 3

#: Arguments the scripted branches are checked on.
_FIRED_RANGE: Final = range(FIRING_BUDGET, 10)

#: Arguments the candidates of the first diagonal theorem are checked on.
_CANDIDATE_RANGE: Final = range(20)

#: Budget from which the candidates' oracle fires.
_CANDIDATE_FIRING: Final = 5

#: Inputs of the fixed point comparison.
_FIXED_POINT_INPUTS: Final = 20

_Outcomes = List[Verdict]
_Builder = Callable[[Oracle, int], DerivedSystem]


@final
class LogicSuite(BaseSuite):
    """Checks the sentence machinery and the oracle driven systems."""

    name = 'logic'

    def __init__(self, *args, **kwargs) -> None:
        """Builds the silent base system once."""
        super().__init__(*args, **kwargs)
        self._machine = build_system()

    def check_numerals(self) -> Verdict:
        """Numerals parse back to their value."""
        outcomes: _Outcomes = []
        for _ in range(self.samples(defaults.PROGRAM_SAMPLES)):
            number = random_argument(self.random, bits=64)
            text = render_numeral(number)
            outcomes.append((
                parse_numeral(text) == (number, len(text)),
                detail('numeral of {0} does not parse back', number),
            ))
        return first_failure(outcomes, 'numerals round trip')

    def check_sentences(self) -> Verdict:
        """Text forms and register codes of sentences round trip."""
        outcomes: _Outcomes = []
        for _ in range(self.samples(defaults.PROGRAM_SAMPLES)):
            sentence = self._random_sentence()
            outcomes.append((
                parse_sentence(str(sentence)) == sentence and
                Sentence.from_code(sentence.to_code()) == sentence,
                detail('sentence {0} does not round trip', sentence),
            ))
        return first_failure(outcomes, 'sentences round trip')

    def check_oracles(self) -> Verdict:
        """Silence proves nothing, scripts fire from their budget on."""
        silent = make_silent()
        scripted = scripted_from([(
            SentencePattern(Template.EXISTS_UNIVERSAL, SystemKind.THETA),
            FIRING_BUDGET,
        )])
        outcomes: _Outcomes = []
        for _ in range(self.samples(defaults.PROGRAM_SAMPLES)):
            sentence = self._random_sentence()
            budget = random_argument(self.random, bits=8)
            fires = (
                sentence.template == Template.EXISTS_UNIVERSAL and
                sentence.system.kind == SystemKind.THETA and
                budget >= FIRING_BUDGET
            )
            outcomes.append((
                not oracle_query(silent, sentence, budget) and
                oracle_query(scripted, sentence, budget) == fires,
                detail('oracles misjudge {0} at {1}', sentence, budget),
            ))
        return first_failure(outcomes, 'oracles are monotone')

    def check_silent_transparency(self) -> Verdict:
        """Under the silent oracle ψ, η and θ are ``φ``."""
        outcomes: _Outcomes = []
        count = self.samples(defaults.TRANSPARENCY_SAMPLES)
        builders: Tuple[_Builder, ...] = (psi_build, eta_build, theta_build)
        for build in builders:
            system = build(make_silent(), self.config.derived_budget)
            for program in random_programs(self.random, count):
                argument = random_argument(self.random)
                outcomes.append((
                    same_behaviour(
                        system.evaluate(program, argument),
                        self._machine.run(
                            program, argument, self.config.budget,
                        ),
                    ) and diagonal_clause(
                        system, program, argument,
                    ) != Clause.diagonal,
                    detail(
                        '{0}_{1}({2}) differs from φ',
                        system.name, program, argument,
                    ),
                ))
        return first_failure(outcomes, detail('{0} points', len(outcomes)))

    def check_scripted_psi_theta(self) -> Verdict:
        """Fired ψ and θ output their own program."""
        outcomes: _Outcomes = []
        for kind, build in ((SystemKind.PSI, psi_build), (
            SystemKind.THETA, theta_build,
        )):
            system = build(self._scripted(kind), self.config.derived_budget)
            outcomes.extend(self._fired_outputs(system))
        return first_failure(outcomes, 'diagonal clauses hold')

    def check_scripted_eta(self) -> Verdict:
        """Fired η outputs its program, except for its own code."""
        system = eta_build(
            self._scripted(SystemKind.ETA), self.config.derived_budget,
        )
        outcomes = self._fired_outputs(system)
        own = system.defining_code
        program = successor()
        for argument in _FIRED_RANGE:
            inner = (program, argument)
            outcomes.append((
                diagonal_clause(system, own, argument) == Clause.exempt and
                same_behaviour(
                    system.evaluate(own, pair(*inner)),
                    system.machine.run(
                        own, pair(*inner), system.budget,
                    ),
                ),
                detail('η_e differs from φ_e at {0}', inner),
            ))
        return first_failure(outcomes, 'diagonal and exempt clauses hold')

    def check_theorem1(self) -> Verdict:
        """Both candidates follow their clauses, silent or scripted."""
        program = successor()
        outcomes: _Outcomes = []
        fired = scripted_from([(
            SentencePattern(Template.EQUIV, SystemKind.PHI, None, (
                None, program,
            )),
            _CANDIDATE_FIRING,
        )])
        for oracle in (make_silent(), fired):
            candidates = theorem1_candidates(program, oracle)
            outcomes.append((
                set_decode(candidates.g_code.code) == {
                    candidates.e1, candidates.e2,
                },
                'the set code does not name both candidates',
            ))
            for candidate in (candidates.e1, candidates.e2):
                for argument in _CANDIDATE_RANGE:
                    outcome = candidates.machine.run(
                        candidate, argument, self.config.derived_budget,
                    )
                    expected = candidates.expected_value(
                        candidate, argument, self.config.budget,
                    )
                    outcomes.append((
                        isinstance(outcome, Halted) and
                        outcome.value == expected,
                        detail(
                            'candidate {0} on {1}: {2}, expected {3}',
                            candidate, argument, outcome, expected,
                        ),
                    ))
        return first_failure(outcomes, 'both clauses hold')

    def check_fixed_point(self) -> Verdict:
        """``φ_p0 = φ_φd(p0)`` and the certificate verifies."""
        outcomes: _Outcomes = []
        for transformation in (identity(), pad_program()):
            demo = fixed_point_demo(
                self._machine, transformation, self.config.budget,
            )
            if demo.certificate is None:
                outcomes.append((False, 'φ_d(p0) did not halt'))
                continue
            outcomes.append((
                verify_certificate(self._machine, demo.certificate),
                detail('certificate of {0} does not verify', transformation),
            ))
            for _ in range(_FIXED_POINT_INPUTS):
                argument = random_argument(self.random)
                outcomes.append((
                    same_behaviour(
                        self._machine.run(
                            demo.p0, argument, self.config.budget,
                        ),
                        self._machine.run(
                            demo.certificate.value,
                            argument,
                            self.config.budget,
                        ),
                    ),
                    detail(
                        'fixed point of {0} fails on {1}',
                        transformation, argument,
                    ),
                ))
        return first_failure(outcomes, 'fixed points hold')

    def _fired_outputs(self, system: DerivedSystem) -> _Outcomes:
        outcomes: _Outcomes = []
        programs = random_programs(self.random, 3)
        for program in programs:
            for argument in _FIRED_RANGE:
                outcome = system.evaluate(program, argument)
                outcomes.append((
                    isinstance(outcome, Halted) and
                    outcome.value == program and
                    diagonal_clause(
                        system, program, argument,
                    ) == Clause.diagonal,
                    detail(
                        '{0}_{1}({2}) = {3}',
                        system.name, program, argument, outcome,
                    ),
                ))
        return outcomes

    def _scripted(self, kind: SystemKind) -> Oracle:
        return scripted_from(
            [(SentencePattern(DIAGONAL_TEMPLATES[kind], kind), FIRING_BUDGET)],
            'logic-suite',
        )

    def _random_sentence(self) -> Sentence:
        template = self.random.choice(list(Template))
        kind = self.random.choice(list(SystemKind))
        system = PHI
        if kind != SystemKind.PHI:
            system = SystemTag(kind, random_argument(self.random, bits=32))
        return Sentence(template, system, [
            random_argument(self.random, bits=32)
            for _ in range(TEMPLATE_ARITY[template])
        ])
