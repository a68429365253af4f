# -*- coding: utf-8 -*-

"""``pad`` and ``pad_once``."""

from typing import List

from typing_extensions import Final, final

from krt_toolkit.basesys.encoding import Abnormal, classify
from krt_toolkit.basesys.outcomes import same_behaviour
from krt_toolkit.checks.base import (
    BaseSuite,
    Verdict,
    detail,
    first_failure,
)
from krt_toolkit.checks.samples import random_argument, random_program
from krt_toolkit.combinators.padding import PaddingCase, pad, pad_once_traced
from krt_toolkit.options import defaults
from krt_toolkit.system import build_system

#: Inputs each padded code is compared on.
_INPUTS: Final = 20

_Outcomes = List[Verdict]


@final
class PaddingSuite(BaseSuite):
    """Checks both padding functions on programs and on arbitrary codes."""

    name = 'pad'

    def __init__(self, *args, **kwargs) -> None:
        """Builds the silent base system once."""
        super().__init__(*args, **kwargs)
        self._machine = build_system()

    def check_pad(self) -> Verdict:
        """``pad(p)`` is even, larger, and computes the same."""
        outcomes: _Outcomes = []
        for code in self._codes():
            padded = pad(code)
            outcomes.append((
                padded % 2 == 0 and padded > code and
                isinstance(classify(padded), Abnormal) ==
                isinstance(classify(code), Abnormal),
                detail('pad({0}) = {1} is not a padding', code, padded),
            ))
            outcomes.append(self._equivalent(code, padded))
        return first_failure(outcomes, detail(
            '{0} codes', len(outcomes) // 2,
        ))

    def check_pad_once(self) -> Verdict:
        """``pad_once(p) ≠ p``, it computes the same, its case is right."""
        outcomes: _Outcomes = []
        cases = {case: 0 for case in PaddingCase}
        for code in self._codes():
            traced = pad_once_traced(code)
            cases[traced.case] += 1
            differs = traced.fixed_point != code
            outcomes.append((
                traced.code != code and
                differs == (traced.case == PaddingCase.fixed_point_differs),
                detail(
                    'pad_once({0}) = {1} ({2})',
                    code, traced.code, traced.case.name,
                ),
            ))
            outcomes.append(self._equivalent(code, traced.code))
        return first_failure(outcomes, ', '.join(
            '{0}: {1}'.format(case.name, count)
            for case, count in cases.items()
        ))

    def _codes(self) -> List[int]:
        count = self.samples(defaults.PADDING_SAMPLES)
        codes = []
        for index in range(count):
            if index % 2:
                codes.append(random_argument(self.random, bits=24))
            else:
                codes.append(random_program(self.random))
        return codes

    def _equivalent(self, code: int, padded: int) -> Verdict:
        budget = self.config.budget
        for _ in range(_INPUTS):
            argument = random_argument(self.random)
            same = same_behaviour(
                self._machine.run(code, argument, budget),
                self._machine.run(padded, argument, budget),
            )
            if not same:
                return False, detail(
                    'φ_{0}({1}) differs after padding',
                    code, argument,
                )
        return True, 'equivalent'
