# -*- coding: utf-8 -*-

"""
``ζ``, its helpers ``w′`` and ``w``, and chains.

The helpers are run on the machine and compared
with host evaluations of their defining clauses
over the explored range.
"""

from typing import List, Optional, Tuple

from typing_extensions import Final, final

from krt_toolkit.basesys.outcomes import (
    Halted,
    RunOutcome,
    same_behaviour,
)
from krt_toolkit.checks.base import (
    BaseSuite,
    Verdict,
    detail,
    first_failure,
)
from krt_toolkit.checks.samples import (
    random_argument,
    random_program,
    random_programs,
)
from krt_toolkit.constructions.base import Clause, DerivedSystem
from krt_toolkit.constructions.chains import chain, unchain
from krt_toolkit.constructions.zeta import (
    compose,
    diagonal_value,
    literal_w,
    literal_w_prime,
    witness_preimage,
    zeta_build,
    zeta_clause,
)
from krt_toolkit.logic.oracles import make_silent, scripted_from
from krt_toolkit.logic.patterns import SentencePattern
from krt_toolkit.logic.sentences import SystemKind, Template
from krt_toolkit.options import defaults

#: Budget from which the scripted oracle fires.
FIRING_BUDGET: Final = 3

#: Composition samples.
COMPOSITION_SAMPLES: Final = 100

#: Associativity samples.
ASSOCIATIVITY_SAMPLES: Final = 50

#: Programs small enough for the diagonal clause to be computed.
_SMALL_PROGRAMS: Final = range(6)

#: Largest exponent of the diagonal clause that is checked.
_LARGEST_EXPONENT: Final = 8

_Outcomes = List[Verdict]
_Triple = Tuple[int, int, int]


@final
class ZetaSuite(BaseSuite):
    """Checks ``ζ`` under the silent and under a scripted oracle."""

    name = 'zeta'

    def __init__(self, *args, **kwargs) -> None:
        """Builds the silent ``ζ`` once."""
        super().__init__(*args, **kwargs)
        self._system = zeta_build(make_silent(), self.config.derived_budget)
        self._w_prime_outputs: Optional[List[int]] = None
        self._witness_outputs: Optional[List[int]] = None

    def check_silent_transparency(self) -> Verdict:
        """Under the silent oracle ``ζ`` is ``φ``."""
        outcomes: _Outcomes = []
        count = self.samples(defaults.TRANSPARENCY_SAMPLES)
        for program in random_programs(self.random, count):
            argument = random_argument(self.random)
            outcomes.append((
                same_behaviour(
                    self._system.evaluate(program, argument),
                    self._run(program, argument),
                ) and zeta_clause(
                    self._system, program, argument,
                ) == Clause.not_proven,
                detail('ζ_{0}({1}) differs from φ', program, argument),
            ))
        return first_failure(outcomes, detail('{0} points', len(outcomes)))

    def check_composition(self) -> Verdict:
        """``ζ_w(⟨p, q⟩)(x) = ζ_p(ζ_q(x))``."""
        outcomes: _Outcomes = []
        for first, second, _ in self._triples(COMPOSITION_SAMPLES):
            argument = random_argument(self.random)
            inner = self._system.evaluate(second, argument)
            if not isinstance(inner, Halted):
                raise ValueError(detail(
                    'ζ_{0}({1}) did not halt',
                    second, argument,
                ))
            expected = self._system.evaluate(first, inner.value)
            composed = compose(self._system, first, second)
            outcomes.append((
                same_behaviour(
                    self._system.evaluate(composed, argument), expected,
                ),
                detail(
                    'composition of {0} and {1} fails on {2}',
                    first, second, argument,
                ),
            ))
        return first_failure(outcomes, detail('{0} triples', len(outcomes)))

    def check_associativity(self) -> Verdict:
        """Composition is associative on program numbers."""
        outcomes: _Outcomes = []
        for first, second, third in self._triples(ASSOCIATIVITY_SAMPLES):
            left = compose(
                self._system, compose(self._system, first, second), third,
            )
            right = compose(
                self._system, first, compose(self._system, second, third),
            )
            outcomes.append((
                left == right,
                detail(
                    'composition of {0} is not associative',
                    (first, second, third),
                ),
            ))
        return first_failure(outcomes, detail('{0} triples', len(outcomes)))

    def check_w_prime(self) -> Verdict:
        """``w′`` is strictly increasing and follows its clauses."""
        outputs = self._w_prime()
        outcomes: _Outcomes = [
            (
                outputs[number] < outputs[number + 1],
                detail('w′ decreases at {0}', number),
            )
            for number in range(len(outputs) - 1)
        ]
        for number, output in enumerate(outputs):
            outcomes.append((
                output > number and not output % 2,
                detail('w′({0}) = {1} is odd or too small', number, output),
            ))
        literal = literal_w_prime(self._system, len(outputs))
        outcomes.append((
            literal == outputs,
            'literal w′ differs from the machine',
        ))
        return first_failure(outcomes, detail('{0} outputs', len(outputs)))

    def check_w(self) -> Verdict:
        """``w`` follows its clauses, its range is inside ``range(w′)``."""
        outputs = self._w_outputs()
        table = literal_w(self._system, self._w_prime())
        outcomes: _Outcomes = [(
            list(table.outputs) == outputs,
            'literal w differs from the machine',
        )]
        for number, output in enumerate(outputs):
            preimage = witness_preimage(self._system, output)
            outcomes.append((
                not output % 2 and preimage is not None and preimage < output,
                detail(
                    'w({0}) = {1} has no earlier w′ preimage',
                    number, output,
                ),
            ))
        return first_failure(outcomes, detail(
            '{0} outputs, ties: {1}',
            len(outputs), list(table.ties),
        ))

    def check_chains(self) -> Verdict:
        """Chains compose back over the range and ``w``, split compositions."""
        outcomes: _Outcomes = [
            self._chain_round_trip(program)
            for program in (*range(self.config.range), *self._w_outputs())
        ]
        for triple in self._triples(self.samples(defaults.PROGRAM_SAMPLES)):
            nested = unchain(self._system, triple)
            outcomes.extend(
                self._chain_round_trip(program)
                for program in (*triple, nested)
            )
            outcomes.append((
                chain(self._system, nested).elements == triple,
                detail('nested composition does not split into {0}', triple),
            ))
        return first_failure(outcomes, detail('{0} chains', len(outcomes)))

    def check_scripted(self) -> Verdict:
        """A fired ``ζ`` diagonalizes, except on outputs of ``w``."""
        system = zeta_build(scripted_from(
            [(SentencePattern(
                Template.EXISTS_DISTINCT_EQUIV, SystemKind.ZETA,
            ), FIRING_BUDGET)],
            'zeta-suite',
        ), self.config.derived_budget)
        outcomes: _Outcomes = []
        arguments = range(FIRING_BUDGET, _LARGEST_EXPONENT + 1)
        for program in _SMALL_PROGRAMS:
            for argument in arguments:
                outcome = system.evaluate(program, argument)
                outcomes.append((
                    isinstance(outcome, Halted) and
                    outcome.value == diagonal_value(program, argument) and
                    zeta_clause(system, program, argument) == Clause.diagonal,
                    detail('ζ_{0}({1}) = {2}', program, argument, outcome),
                ))
        first, second, _ = self._triples(1)[0]
        composed = compose(system, first, second)
        for argument in arguments:
            outcomes.append((
                zeta_clause(system, composed, argument) == Clause.exempt and
                same_behaviour(
                    system.evaluate(composed, argument),
                    system.machine.run(composed, argument, system.budget),
                ),
                detail('ζ_{0}({1}) is not exempt', composed, argument),
            ))
        return first_failure(outcomes, 'diagonal and exempt clauses hold')

    def _chain_round_trip(self, program: int) -> Verdict:
        elements = chain(self._system, program).elements
        return (
            unchain(self._system, elements) == program and all(
                witness_preimage(self._system, element) is None
                for element in elements
            ),
            detail('chain of {0} is {1}', program, elements),
        )

    def _triples(self, prescribed: int) -> List[_Triple]:
        triples = []
        for _ in range(self.samples(prescribed)):
            first, second, third = (
                random_program(self.random) for _ in range(3)
            )
            triples.append((first, second, third))
        return triples

    def _run(self, program: int, argument: int) -> RunOutcome:
        return self._system.machine.run(
            program, argument, self.config.budget,
        )

    def _helper_outputs(self, helper: str) -> List[int]:
        outputs = []
        for number in range(self.config.range):
            outcome = self._system.machine.run(
                self._system.auxiliary[helper], number, self._system.budget,
            )
            if not isinstance(outcome, Halted):
                raise ValueError(detail(
                    '{0}({1}) did not halt: {2}',
                    helper, number, outcome,
                ))
            outputs.append(outcome.value)
        return outputs

    def _w_prime(self) -> List[int]:
        if self._w_prime_outputs is None:
            self._w_prime_outputs = self._helper_outputs('w_prime')
        return self._w_prime_outputs

    def _w_outputs(self) -> List[int]:
        if self._witness_outputs is None:
            self._witness_outputs = self._helper_outputs('w')
        return self._witness_outputs
