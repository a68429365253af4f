# -*- coding: utf-8 -*-

"""
Programming systems derived from the base one.

A derived system is given by a defining code ``e`` of the base system:
program ``p`` of the derived system on ``x`` is ``φ_e(⟨p, x⟩)``.
"""

import enum
from typing import Mapping, Optional

import attr
from typing_extensions import final

from krt_toolkit.basesys.machine import Machine
from krt_toolkit.basesys.outcomes import RunOutcome
from krt_toolkit.logic.oracles import Oracle
from krt_toolkit.logic.sentences import SystemTag
from krt_toolkit.numcode import pair


@final
class Clause(enum.Enum):
    """Which defining clause applies to an input of a construction."""

    #: The oracle fired and the construction takes its diagonal branch.
    diagonal = 'diagonal'

    #: The oracle did not fire within the budget.
    not_proven = 'not-proven'

    #: The oracle fired, but the program is exempt from the diagonal.
    exempt = 'exempt'


@final
@attr.dataclass(frozen=True, slots=True)
class DerivedSystem(object):
    """
    A system ``sys_p(x) = φ_e(⟨p, x⟩)`` together with its helper codes.

    Attributes:
        tag: names the system, it carries the defining code.
        machine: the base system, including the oracle.
        oracle: the oracle the system was built for.
        budget: default budget of evaluations.
        auxiliary: named helper codes, all of them normal.

    """

    tag: SystemTag
    machine: Machine = attr.ib(eq=False, repr=False)
    oracle: Oracle = attr.ib(repr=False)
    budget: int
    auxiliary: Mapping[str, int] = attr.ib(factory=dict)

    @property
    def defining_code(self) -> int:
        """The code ``e``."""
        return self.tag.code

    @property
    def name(self) -> str:
        """Lower case name of the system."""
        return self.tag.kind.name.lower()

    def evaluate(
        self,
        program: int,
        argument: int,
        budget: Optional[int] = None,
    ) -> RunOutcome:
        """Runs program ``p`` of the derived system on ``x``."""
        return self.machine.run(
            self.defining_code,
            pair(program, argument),
            self.budget if budget is None else budget,
        )

    def codes(self) -> Mapping[str, int]:
        """Defining and helper codes, ready to print."""
        return {'e': self.defining_code, **self.auxiliary}
