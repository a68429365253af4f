# -*- coding: utf-8 -*-

"""
Diagonal constructions in the base system.

:func:`theorem1_candidates` builds two programs for a given ``p``:
one of them adds one to ``φ_p(x)`` and the other outputs zero,
each only once the oracle proves that it is equivalent to ``p``.
Otherwise both behave like ``p``.
Which one is the right witness depends on whether ``φ_p`` has
a finite domain, so both are returned.

:func:`fixed_point_demo` builds ``p0`` with ``φ_p0 = φ_φd(p0)``
and certifies the value ``φ_d(p0)`` when it halts within the budget.
"""

import functools
import logging
from typing import Optional

import attr
from typing_extensions import final

from krt_toolkit.basesys.instructions import PrimitiveId
from krt_toolkit.basesys.machine import Machine
from krt_toolkit.basesys.outcomes import Halted, RunOutcome
from krt_toolkit.combinators.assembler import Assembler
from krt_toolkit.combinators.control import comp_m, if_then_else
from krt_toolkit.combinators.recursion import krt, krt_plain
from krt_toolkit.combinators.stock import constant, first, second
from krt_toolkit.constructions.base import Clause
from krt_toolkit.logic.oracles import Oracle, make_silent, oracle_query
from krt_toolkit.logic.sentences import PHI, Sentence, SystemKind, Template
from krt_toolkit.numcode import SetCode, bitlen, set_encode, short_text
from krt_toolkit.system import build_system
from krt_toolkit.universal.certificates import Certificate
from krt_toolkit.universal.simulation import universal_code

logger = logging.getLogger(__name__)


def _split_krt_input(program: Assembler) -> Assembler:
    # r1 = self, r3 = p, r4 = x
    return program.unpair(1, 2, 0).unpair(3, 4, 2)


@functools.lru_cache(maxsize=None)
def _equivalence_guard() -> int:
    # φ(⟨self, ⟨p, x⟩⟩) = 1 when Equiv[phi](self, p) is proven within x
    program = _split_krt_input(Assembler())
    program.set(10, int(Template.EQUIV)).set(11, int(SystemKind.PHI))
    program.set(12, 0).copy(13, 1).copy(14, 3).set(15, 0)
    program.ext(PrimitiveId.QUOTE, 5, 10)
    program.call(PrimitiveId.ORACLE, 0, (5, 4), scratch=6)
    return program.halt(0).code()


@functools.lru_cache(maxsize=None)
def _run_parameter(increment: bool) -> int:
    # φ(⟨self, ⟨p, x⟩⟩) = φ_p(x), plus one when asked to
    program = _split_krt_input(Assembler())
    program.simulate(0, 3, 4, scratch=5)
    if increment:
        program.inc(0)
    return program.halt(0).code()


@final
@attr.dataclass(frozen=True, slots=True)
class Theorem1Candidates(object):
    """
    The two candidates built for ``program``.

    Attributes:
        program: ``p``.
        g_code: code of the set ``{e1, e2}``.
        e1: adds one to ``φ_p(x)`` once ``Equiv(e1, p)`` is proven.
        e2: outputs zero once ``Equiv(e2, p)`` is proven.
        machine: base system with the oracle the candidates consult.

    """

    program: int
    g_code: SetCode
    e1: int
    e2: int
    oracle: Oracle = attr.ib(repr=False)
    machine: Machine = attr.ib(eq=False, repr=False)

    def sentence(self, candidate: int) -> Sentence:
        """The sentence ``candidate`` asks the oracle about."""
        return Sentence(Template.EQUIV, PHI, (candidate, self.program))

    def clause(self, candidate: int, argument: int) -> Clause:
        """Which clause the candidate follows on ``argument``."""
        if oracle_query(self.oracle, self.sentence(candidate), argument):
            return Clause.diagonal
        return Clause.not_proven

    def expected_value(
        self,
        candidate: int,
        argument: int,
        budget: int,
    ) -> Optional[int]:
        """
        Evaluates the defining clauses on the host.

        ``None`` means that ``φ_p(x)`` did not halt within the budget.

        Raises:
            ValueError: when ``candidate`` is neither ``e1`` nor ``e2``.

        """
        if candidate not in {self.e1, self.e2}:
            raise ValueError('Not a candidate: {0}'.format(candidate))
        fired = self.clause(candidate, argument) == Clause.diagonal
        if fired and candidate == self.e2:
            return 0
        outcome = self.machine.run(self.program, argument, budget)
        if not isinstance(outcome, Halted):
            return None
        return outcome.value + 1 if fired else outcome.value


def theorem1_candidates(
    program: int,
    oracle: Optional[Oracle] = None,
) -> Theorem1Candidates:
    """
    Builds ``e1`` and ``e2`` for ``program``.

    Both come from ``krt`` applied to a conditional
    whose guard asks the oracle about the program's own code.
    """
    if oracle is None:
        oracle = make_silent()
    guard = _equivalence_guard()
    otherwise = _run_parameter(increment=False)
    e1 = krt(program, if_then_else(
        guard, _run_parameter(increment=True), otherwise,
    ))
    e2 = krt(program, if_then_else(guard, constant(0), otherwise))
    logger.debug(
        'theorem1: candidates of %d and %d bits',
        bitlen(e1), bitlen(e2),
    )
    return Theorem1Candidates(
        program=program,
        g_code=set_encode({e1, e2}),
        e1=e1,
        e2=e2,
        oracle=oracle,
        machine=build_system(oracle),
    )


@final
@attr.dataclass(frozen=True, slots=True)
class FixedPoint(object):
    """
    Result of :func:`fixed_point_demo`.

    Attributes:
        d: the transformation of program codes.
        p0: the fixed point, ``φ_p0 = φ_φd(p0)``.
        q0: outcome of ``φ_d(p0)``.
        certificate: checkable evidence of ``φ_d(p0) = q0``, if it halted.

    """

    d: int
    p0: int
    q0: RunOutcome
    certificate: Optional[Certificate] = None

    @property
    def sentence(self) -> Optional[Sentence]:
        """``HaltsWith(d, p0, q0)`` when ``φ_d(p0)`` halted."""
        if self.certificate is None:
            return None
        return Sentence(
            Template.HALTS_WITH,
            PHI,
            (self.d, self.p0, self.certificate.value),
        )


@functools.lru_cache(maxsize=256)
def _fixed_point_code(d: int) -> int:
    # r_d(⟨self, x⟩) = φ_u(⟨φ_d(self), x⟩)
    task = comp_m(universal_code(), [comp_m(d, [first()]), second()])
    return krt_plain(task)


def fixed_point_demo(machine: Machine, d: int, budget: int) -> FixedPoint:
    """
    Builds the fixed point of ``d`` and runs ``φ_d(p0)``.

    The fixed point exists even when ``d`` diverges on it,
    then ``q0`` reports the divergence and there is no certificate.
    """
    p0 = _fixed_point_code(d)
    outcome = machine.run(d, p0, budget)
    certificate = None
    if isinstance(outcome, Halted):
        certificate = Certificate(d, p0, outcome.value, outcome.steps)
    logger.debug(
        'fixed point of %d bits, halted: %s', bitlen(p0), short_text(outcome),
    )
    return FixedPoint(d=d, p0=p0, q0=outcome, certificate=certificate)
