# -*- coding: utf-8 -*-

from typing import Union

import attr
from typing_extensions import final


@final
@attr.dataclass(frozen=True, slots=True)
class Halted(object):
    """The run stopped with ``value`` after exactly ``steps`` steps."""

    value: int
    steps: int

    @property
    def halted(self) -> bool:
        """Whether the run produced a value."""
        return True


@final
@attr.dataclass(frozen=True, slots=True)
class OutOfBudget(object):
    """The run did not stop within ``budget`` steps."""

    budget: int

    @property
    def halted(self) -> bool:
        """Whether the run produced a value."""
        return False


@final
@attr.dataclass(frozen=True, slots=True)
class AbnormalDivergence(object):
    """The program code is abnormal, so the run never stops."""

    @property
    def halted(self) -> bool:
        """Whether the run produced a value."""
        return False


#: Result of a budgeted run.
RunOutcome = Union[Halted, OutOfBudget, AbnormalDivergence]


def same_behaviour(first: RunOutcome, second: RunOutcome) -> bool:
    """Whether two outcomes agree on halting status and value."""
    if isinstance(first, Halted) and isinstance(second, Halted):
        return first.value == second.value
    return first.halted == second.halted
