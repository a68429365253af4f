# -*- coding: utf-8 -*-

"""Program numbering, the two execution strategies, and certificates."""

from typing import List

import attr
from typing_extensions import final

from krt_toolkit.basesys.encoding import (
    Abnormal,
    ProgramBody,
    classify,
    decode_program,
    encode_program,
)
from krt_toolkit.basesys.outcomes import AbnormalDivergence, Halted, OutOfBudget
from krt_toolkit.checks.base import (
    BaseSuite,
    Verdict,
    detail,
    first_failure,
)
from krt_toolkit.checks.samples import random_argument, random_programs
from krt_toolkit.options import defaults
from krt_toolkit.system import build_system
from krt_toolkit.universal.certificates import (
    Certificate,
    emit_certificate,
    verify_certificate,
)


@final
class BasesysSuite(BaseSuite):
    """Checks decoding, divergence of abnormal codes, and step counts."""

    name = 'basesys'

    def check_certificates(self) -> Verdict:
        """Certificates verify, and change of any field is noticed."""
        machine = build_system()
        budget = self.config.budget
        outcomes = []
        for program in self._programs():
            emitted = emit_certificate(
                machine, program, random_argument(self.random), budget,
            )
            if not isinstance(emitted, Certificate):
                outcomes.append((False, detail('φ_{0} did not halt', program)))
                continue
            outcomes.append((
                verify_certificate(machine, emitted),
                detail('certificate {0} does not verify', emitted),
            ))
            for tampered in _tampered(emitted):
                genuine = emit_certificate(
                    machine, tampered.program, tampered.argument, budget,
                ) == tampered
                outcomes.append((
                    verify_certificate(machine, tampered) == genuine,
                    detail('tampered certificate {0} verifies', tampered),
                ))
        return first_failure(outcomes, 'only exact certificates verify')

    def check_numbering(self) -> Verdict:
        """Normal codes are multiples of eight and decode back."""
        outcomes = []
        for program in self._programs():
            body = decode_program(program)
            outcomes.append((
                program % 8 == 0 and
                isinstance(body, ProgramBody) and
                encode_program(body) == program,
                detail('code {0} does not round trip', program),
            ))
        return first_failure(outcomes, 'all codes round trip')

    def check_abnormal_codes(self) -> Verdict:
        """Codes that are not multiples of eight diverge everywhere."""
        machine = build_system()
        outcomes = []
        for _ in range(self.samples(defaults.PROGRAM_SAMPLES)):
            code = random_argument(self.random, bits=64) * 8 + 1
            code += self.random.randrange(7)
            outcomes.append((
                isinstance(classify(code), Abnormal) and isinstance(
                    machine.run(code, random_argument(self.random), 10),
                    AbnormalDivergence,
                ),
                detail('code {0} does not diverge', code),
            ))
        return first_failure(outcomes, 'all abnormal codes diverge')

    def check_strategies_agree(self) -> Verdict:
        """The dispatch loop and the stepwise interpreter agree."""
        fast = build_system()
        stepwise = build_system(stepwise=True)
        outcomes = []
        for program in self._programs():
            argument = random_argument(self.random)
            outcomes.append((
                fast.run(program, argument, self.config.budget) ==
                stepwise.run(program, argument, self.config.budget),
                detail('strategies disagree on φ_{0}({1})', program, argument),
            ))
        return first_failure(outcomes, 'identical outcomes and steps')

    def check_step_counts(self) -> Verdict:
        """A run that halts in ``t`` steps is out of budget at ``t - 1``."""
        machine = build_system()
        outcomes = []
        for program in self._programs():
            argument = random_argument(self.random)
            outcome = machine.run(program, argument, self.config.budget)
            if not isinstance(outcome, Halted):
                outcomes.append((False, detail('φ_{0} did not halt', program)))
                continue
            short = machine.run(program, argument, outcome.steps - 1)
            outcomes.append((
                isinstance(short, OutOfBudget) and
                machine.run(program, argument, outcome.steps) == outcome,
                detail(
                    'budget boundary fails for φ_{0}({1})',
                    program, argument,
                ),
            ))
        return first_failure(outcomes, 'budgets are exact')

    def _programs(self) -> List[int]:
        return random_programs(
            self.random, self.samples(defaults.PROGRAM_SAMPLES),
        )


def _tampered(certificate: Certificate) -> List[Certificate]:
    # a changed value or step count is never a genuine certificate
    return [
        attr.evolve(certificate, program=certificate.program + 8),
        attr.evolve(certificate, argument=certificate.argument + 1),
        attr.evolve(certificate, value=certificate.value + 1),
        attr.evolve(certificate, steps=certificate.steps + 1),
        attr.evolve(certificate, steps=certificate.steps - 1),
    ]
