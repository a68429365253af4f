# -*- coding: utf-8 -*-

"""
Halting certificates: ``φ_p(x)↓ = y`` in exactly ``t`` steps.

A certificate is checked by recomputation, nothing else is trusted.
Changing any of its four fields makes it fail.
Certificates travel as JSON lines with decimal string fields,
so arbitrarily large numbers survive any JSON reader.
"""

import json
from typing import Dict, Optional, Union

import attr
from typing_extensions import Final, final

from krt_toolkit.basesys.machine import Machine
from krt_toolkit.basesys.outcomes import (
    AbnormalDivergence,
    Halted,
    OutOfBudget,
)

#: Record fields, in output order.
CERTIFICATE_FIELDS: Final = ('p', 'x', 'y', 't')


@final
@attr.dataclass(frozen=True, slots=True)
class Certificate(object):
    """Claims that program ``p`` on ``x`` outputs ``y`` after ``t`` steps."""

    program: int
    argument: int
    value: int
    steps: int


def emit_certificate(
    machine: Machine,
    program: int,
    argument: int,
    budget: int,
) -> Union[Certificate, OutOfBudget, AbnormalDivergence]:
    """Runs the program and certifies its output, if it halts in budget."""
    outcome = machine.run(program, argument, budget)
    if isinstance(outcome, Halted):
        return Certificate(program, argument, outcome.value, outcome.steps)
    return outcome


def verify_certificate(machine: Machine, certificate: Certificate) -> bool:
    """Recomputes the run and compares it with the certificate."""
    if min(attr.astuple(certificate)) < 0:
        return False
    outcome = machine.run(
        certificate.program, certificate.argument, certificate.steps,
    )
    return (
        isinstance(outcome, Halted) and
        outcome.value == certificate.value and
        outcome.steps == certificate.steps
    )


def minimal_certificate_budget(
    machine: Machine,
    program: int,
    argument: int,
    limit: int,
) -> Optional[int]:
    """
    Finds the least budget that certifies a run by a linear scan.

    Returns ``None`` when no budget up to ``limit`` is enough.
    """
    for budget in range(limit + 1):
        if isinstance(machine.run(program, argument, budget), Halted):
            return budget
    return None


def certificate_to_record(certificate: Certificate) -> str:
    """
    Serializes a certificate as one JSON line.

    >>> certificate_to_record(Certificate(1, 2, 3, 4))
    '{"p": "1", "x": "2", "y": "3", "t": "4"}'

    """
    return json.dumps(dict(zip(
        CERTIFICATE_FIELDS,
        (str(field) for field in attr.astuple(certificate)),
    )))


def certificate_from_record(record: str) -> Certificate:
    """
    Parses a JSON line written by :func:`certificate_to_record`.

    Raises:
        ValueError: when the record is malformed.

    """
    try:
        fields: Dict[str, str] = json.loads(record)
    except json.JSONDecodeError as exc:
        raise ValueError('Malformed certificate record: {0}'.format(exc))
    if not isinstance(fields, dict) or set(fields) != set(CERTIFICATE_FIELDS):
        raise ValueError('Certificate needs exactly the fields {0}'.format(
            CERTIFICATE_FIELDS,
        ))
    numbers = []
    for name in CERTIFICATE_FIELDS:
        field = fields[name]
        if not isinstance(field, str) or not field.isdigit():
            raise ValueError('Field {0} is not a decimal string: {1!r}'.format(
                name, field,
            ))
        numbers.append(int(field))
    return Certificate(*numbers)
