# -*- coding: utf-8 -*-

"""
Contains the base class of verification suites.

Each suite checks one group of properties and reports
one :class:`CheckResult` per check.

Conventions
~~~~~~~~~~~

- Public check methods start with ``check_``,
  then comes the name of the check as it is reported
- Checks return whether they passed and a short detail line,
  built lazily with :func:`detail` so that codes of any size
  are shortened and only the reported line is ever formatted
- Every random selection is drawn from ``self.random``,
  which is seeded by the configuration
- A check that raises is reported as failed with the error,
  the traceback is logged

Suites run their checks in alphabetical order,
so the same configuration always gives the same report.
"""

import logging
import random
from typing import Any, Callable, ClassVar, List, Tuple, Union

import attr
from typing_extensions import Final, final

from krt_toolkit.numcode.display import short_text
from krt_toolkit.options.validation import CliConfig

logger = logging.getLogger(__name__)

_CHECK_PREFIX: Final = 'check_'


@final
@attr.dataclass(frozen=True, slots=True)
class Detail(object):
    """
    A detail line that is formatted only when it is reported.

    Numbers inside the arguments are shortened with
    :func:`~krt_toolkit.numcode.display.short_text`.
    """

    template: str
    arguments: Tuple[Any, ...]

    def __str__(self) -> str:
        """Formats the template."""
        return self.template.format(*map(short_text, self.arguments))


def detail(template: str, *arguments: Any) -> Detail:
    """
    Creates a lazy detail line.

    >>> str(detail('chain of {0} is {1}', 1 << 300, [1, 2]))
    'chain of 0x80000000…<301 bits> is [1, 2]'

    """
    return Detail(template, arguments)


#: What a check method returns: whether it passed and a detail line.
Verdict = Tuple[bool, Union[str, Detail]]


@final
@attr.dataclass(frozen=True, slots=True)
class CheckResult(object):
    """Outcome of one check, with stable field names."""

    suite: str
    check: str
    passed: bool
    detail: str


class BaseSuite(object):
    """
    Abstract base class of verification suites.

    Attributes:
        name: name of the suite on the command line.
        config: validated options.
        random: seeded source of every random selection.
        results: results of the checks that already ran.

    """

    name: ClassVar[str]

    def __init__(self, config: CliConfig) -> None:
        """Creates a suite with a freshly seeded random source."""
        self.config = config
        self.random = random.Random('{0}:{1}'.format(self.name, config.seed))
        self.results: List[CheckResult] = []

    @final
    def run(self) -> List[CheckResult]:
        """Runs every check of the suite in a fixed order."""
        for check_name, method in self._checks():
            self.add_result(check_name, method)
        return self.results

    @final
    def add_result(
        self,
        check_name: str,
        method: Callable[[], Verdict],
    ) -> None:
        """Runs one check and records its outcome."""
        try:
            passed, line = method()
        except Exception as exc:
            logger.exception('%s.%s raised', self.name, check_name)
            passed, line = False, 'error: {0}: {1}'.format(
                type(exc).__name__, exc,
            )
        result = CheckResult(self.name, check_name, passed, str(line))
        logger.info(
            '%s.%s: %s, %s',
            self.name, check_name, 'pass' if passed else 'FAIL', result.detail,
        )
        self.results.append(result)

    def samples(self, prescribed: int) -> int:
        """Sample count of a check, honouring the configuration."""
        return self.config.sample_count(prescribed)

    def _checks(self) -> List[Tuple[str, Callable[[], Verdict]]]:
        return [
            (attribute[len(_CHECK_PREFIX):], getattr(self, attribute))
            for attribute in sorted(dir(self))
            if attribute.startswith(_CHECK_PREFIX)
        ]


def first_failure(
    outcomes: List[Verdict],
    summary: Union[str, Detail],
) -> Verdict:
    """
    Folds per sample outcomes into one verdict.

    >>> first_failure([(True, 'a'), (False, 'b')], '2 samples')
    (False, 'b')
    >>> first_failure([(True, 'a')], '1 sample')
    (True, '1 sample')

    """
    for passed, detail in outcomes:
        if not passed:
            return False, detail
    return True, summary
