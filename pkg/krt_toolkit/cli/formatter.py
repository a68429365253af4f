# -*- coding: utf-8 -*-

"""
Prints command results for people or for machines.

Every result is one record with stable field names.
The ``text`` format prints a readable line per record,
the ``structured`` format prints one JSON object per line.
Numbers are written as decimal strings there,
so codes of any size survive every JSON reader.
"""

import json
from typing import Any, Dict, Mapping, Optional

import click
from typing_extensions import final

from krt_toolkit.basesys.outcomes import AbnormalDivergence, Halted, RunOutcome
from krt_toolkit.checks.base import CheckResult


def _structured_value(field_value: Any) -> Any:
    if isinstance(field_value, bool) or field_value is None:
        return field_value
    if isinstance(field_value, int):
        return str(field_value)
    if isinstance(field_value, (list, tuple)):
        return [_structured_value(element) for element in field_value]
    return str(field_value)


def outcome_record(outcome: RunOutcome) -> Dict[str, Any]:
    """Fields describing a budgeted run."""
    if isinstance(outcome, Halted):
        return {
            'outcome': 'halted',
            'value': outcome.value,
            'steps': outcome.steps,
        }
    if isinstance(outcome, AbnormalDivergence):
        return {'outcome': 'abnormal-divergence'}
    return {'outcome': 'out-of-budget', 'budget': outcome.budget}


def outcome_text(outcome: RunOutcome) -> str:
    """
    One line describing a budgeted run.

    >>> outcome_text(Halted(42, 3))
    '42 (3 steps)'

    """
    if isinstance(outcome, Halted):
        return '{0} ({1} steps)'.format(outcome.value, outcome.steps)
    if isinstance(outcome, AbnormalDivergence):
        return 'AbnormalDivergence'
    return 'OutOfBudget({0})'.format(outcome.budget)


@final
class Reporter(object):
    """Writes records to standard output in the configured format."""

    def __init__(self, structured: bool) -> None:
        """Remembers the output format."""
        self._structured = structured

    def emit(
        self,
        record: Mapping[str, Any],
        text: Optional[str] = None,
    ) -> None:
        """
        Prints one record.

        ``text`` is the readable form,
        it defaults to the ``name: value`` pairs of the record.
        """
        if self._structured:
            click.echo(json.dumps({
                name: _structured_value(field_value)
                for name, field_value in record.items()
            }))
            return
        if text is None:
            text = '\n'.join(
                '{0}: {1}'.format(name, field_value)
                for name, field_value in record.items()
            )
        click.echo(text)

    def check(self, result: CheckResult) -> None:
        """Prints the outcome of one verification check."""
        self.emit(
            {
                'suite': result.suite,
                'check': result.check,
                'passed': result.passed,
                'detail': result.detail,
            },
            '{0:<6} {1}.{2}: {3}'.format(
                'pass' if result.passed else 'FAIL',
                result.suite,
                result.check,
                result.detail,
            ),
        )
