# -*- coding: utf-8 -*-

"""
Combinators: S-m-n, composition, conditionals and recursion theorems.

Besides the defining equations the suite fits the linear overhead
of ``krt`` and ``if_then_else`` and fails when the fitted constant
exceeds :data:`MAX_OVERHEAD`.
"""

from typing import List, Tuple

from typing_extensions import Final, final

from krt_toolkit.basesys.outcomes import Halted, OutOfBudget, same_behaviour
from krt_toolkit.checks.base import (
    BaseSuite,
    Verdict,
    detail,
    first_failure,
)
from krt_toolkit.checks.samples import random_argument, random_programs
from krt_toolkit.combinators.control import comp_m, if_then_else
from krt_toolkit.combinators.fitting import fit_overhead
from krt_toolkit.combinators.recursion import krt, mixed_rt
from krt_toolkit.combinators.specialize import smn
from krt_toolkit.combinators.stock import diverger
from krt_toolkit.numcode import bitlen, pair, tuple_encode
from krt_toolkit.options import defaults
from krt_toolkit.system import build_system
from krt_toolkit.universal.simulation import compare_modes

#: Largest acceptable constant of a linear overhead fit.
MAX_OVERHEAD: Final = 1000

#: Triples the conditional is checked on.
_CONDITIONAL_SAMPLES: Final = 50

#: Inputs of each program in the mode conformance check.
_MODE_INPUTS: Final = 5

_Outcomes = List[Verdict]


@final
class KrtSuite(BaseSuite):
    """Checks every program producing combinator against its equation."""

    name = 'krt'

    def __init__(self, *args, **kwargs) -> None:
        """Builds the silent base system once."""
        super().__init__(*args, **kwargs)
        self._machine = build_system()

    def check_smn(self) -> Verdict:
        """``φ_smn(p, a)(x) = φ_p(⟨a, x⟩)``."""
        outcomes: _Outcomes = []
        for program in self._programs():
            stored = random_argument(self.random)
            argument = random_argument(self.random)
            outcomes.append(self._agree(
                smn(program, stored), argument, program, pair(stored, argument),
            ))
        return first_failure(outcomes, 'stored arguments are seen')

    def check_composition(self) -> Verdict:
        """``φ_comp(p0, [p1, p2])(x) = φ_p0(⟨φ_p1(x), φ_p2(x)⟩)``."""
        outcomes: _Outcomes = []
        programs = self._programs()
        for outer in programs:
            first, second = self.random.sample(programs, 2)
            argument = random_argument(self.random)
            inner = [
                self._value(first, argument), self._value(second, argument),
            ]
            outcomes.append(self._agree(
                comp_m(outer, [first, second]),
                argument,
                outer,
                pair(*inner),
            ))
        return first_failure(outcomes, 'compositions agree')

    def check_conditional(self) -> Verdict:
        """All three clauses and a linear overhead."""
        outcomes: _Outcomes = []
        costs: List[Tuple[int, int]] = []
        count = self.samples(_CONDITIONAL_SAMPLES)
        programs = random_programs(self.random, 3 * count)
        for index in range(count):
            guard, then, otherwise = programs[3 * index:3 * index + 3]
            argument = random_argument(self.random)
            combined = if_then_else(guard, then, otherwise)
            chosen = then if self._value(guard, argument) else otherwise
            outcomes.append(self._agree(combined, argument, chosen, argument))
            costs.append((
                self._steps(combined, argument) -
                self._steps(guard, argument) -
                self._steps(chosen, argument),
                bitlen(argument),
            ))
        diverging = if_then_else(diverger(), programs[0], programs[1])
        outcomes.append((
            isinstance(self._machine.run(diverging, 0, 1000), OutOfBudget),
            'a diverging guard does not make the conditional diverge',
        ))
        return self._with_fit(outcomes, costs)

    def check_krt(self) -> Verdict:
        """``φ_krt(p, r)(x) = φ_r(⟨q, ⟨p, x⟩⟩)`` and a linear overhead."""
        outcomes: _Outcomes = []
        costs: List[Tuple[int, int]] = []
        for task in self._programs():
            parameter = random_argument(self.random)
            argument = random_argument(self.random)
            fixed_point = krt(parameter, task)
            task_input = pair(fixed_point, pair(parameter, argument))
            outcomes.append(self._agree(
                fixed_point, argument, task, task_input,
            ))
            costs.append((
                self._steps(fixed_point, argument) -
                self._steps(task, task_input),
                bitlen(fixed_point) + bitlen(parameter) + bitlen(argument),
            ))
        return self._with_fit(outcomes, costs)

    def check_mixed_recursion(self) -> Verdict:
        """Every index runs its task, ``φ_c`` delays the last one."""
        outcomes: _Outcomes = []
        programs = self._programs()
        for delayed in programs[:max(1, len(programs) // 10)]:
            tasks = self.random.sample(programs, 2)
            recursion = mixed_rt(tasks, delayed)
            header = [*recursion.indices, recursion.delayed]
            argument = random_argument(self.random)
            second = random_argument(self.random)
            for index, task in zip(recursion.indices, tasks):
                outcomes.append(self._agree(
                    index, argument, task,
                    tuple_encode([*header, argument], len(header) + 1),
                ))
            outcomes.append(self._agree(
                self._value(recursion.delayed, argument),
                second,
                delayed,
                tuple_encode(
                    [*header, argument, second], len(header) + 2,
                ),
            ))
        return first_failure(outcomes, 'tasks and delayed task agree')

    def check_modes(self) -> Verdict:
        """Accelerated and pure simulation agree, steps included."""
        outcomes: _Outcomes = []
        for program in self._programs():
            for _ in range(_MODE_INPUTS):
                argument = random_argument(self.random)
                outcomes.append((
                    compare_modes(
                        self._machine, program, argument, self.config.budget,
                    ),
                    detail('modes disagree on φ_{0}({1})', program, argument),
                ))
        return first_failure(outcomes, 'modes agree')

    def _programs(self) -> List[int]:
        return random_programs(
            self.random, max(2, self.samples(defaults.PROGRAM_SAMPLES)),
        )

    def _agree(
        self,
        program: int,
        argument: int,
        reference: int,
        reference_argument: int,
    ) -> Verdict:
        budget = self.config.budget
        return (
            same_behaviour(
                self._machine.run(program, argument, budget),
                self._machine.run(reference, reference_argument, budget),
            ),
            detail(
                'φ_{0}({1}) differs from φ_{2}({3})',
                program, argument, reference, reference_argument,
            ),
        )

    def _value(self, program: int, argument: int) -> int:
        outcome = self._machine.run(program, argument, self.config.budget)
        if not isinstance(outcome, Halted):
            raise ValueError(detail(
                'φ_{0}({1}) did not halt: {2}',
                program, argument, outcome,
            ))
        return outcome.value

    def _steps(self, program: int, argument: int) -> int:
        outcome = self._machine.run(program, argument, self.config.budget)
        if not isinstance(outcome, Halted):
            raise ValueError(detail(
                'φ_{0}({1}) did not halt: {2}',
                program, argument, outcome,
            ))
        return outcome.steps

    def _with_fit(
        self,
        outcomes: _Outcomes,
        costs: List[Tuple[int, int]],
    ) -> Verdict:
        constant = fit_overhead(costs)
        outcomes.append((
            constant <= MAX_OVERHEAD,
            detail(
                'overhead constant {0} exceeds {1}',
                constant, MAX_OVERHEAD,
            ),
        ))
        return first_failure(outcomes, detail(
            'fitted overhead constant {0}', constant,
        ))
