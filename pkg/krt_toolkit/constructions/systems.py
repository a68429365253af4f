# -*- coding: utf-8 -*-

"""
Systems that output their program once a sentence about them is proven.

For the defining code ``e`` and a program ``p``:

- ``ψ_p(x) = p`` when ``ExistsDistinctEquiv[ψ]`` is proven within ``x``
- ``η_p(x) = p`` likewise, except for ``p = e`` that always runs ``φ_e``
- ``θ_p(x) = p`` when ``ExistsUniversal[θ]`` is proven within ``x``

Otherwise ``sys_p(x) = φ_p(x)``.
Under the silent oracle every one of them is ``φ`` itself.
"""

import functools
import logging

from typing_extensions import Final

from krt_toolkit.basesys.instructions import PrimitiveId
from krt_toolkit.combinators.assembler import Assembler
from krt_toolkit.combinators.recursion import krt_plain
from krt_toolkit.constructions.base import Clause, DerivedSystem
from krt_toolkit.logic.oracles import Oracle, oracle_query
from krt_toolkit.logic.sentences import (
    Sentence,
    SystemKind,
    SystemTag,
    Template,
)
from krt_toolkit.numcode import bitlen
from krt_toolkit.options.defaults import DERIVED_BUDGET
from krt_toolkit.system import build_system

logger = logging.getLogger(__name__)

#: Sentence each system diagonalizes against.
DIAGONAL_TEMPLATES: Final = {
    SystemKind.PSI: Template.EXISTS_DISTINCT_EQUIV,
    SystemKind.ETA: Template.EXISTS_DISTINCT_EQUIV,
    SystemKind.THETA: Template.EXISTS_UNIVERSAL,
}


@functools.lru_cache(maxsize=None)
def _diagonal_task(kind: SystemKind) -> int:
    # φ(⟨e, ⟨p, x⟩⟩): r1 = e, r3 = p, r4 = x
    program = Assembler().unpair(1, 2, 0).unpair(3, 4, 2)
    if kind == SystemKind.ETA:
        program.call(PrimitiveId.EQUAL, 5, (3, 1), scratch=6)
        program.jz(5, 'quote').jmp('run')
        program.label('quote')

    program.set(10, int(DIAGONAL_TEMPLATES[kind])).set(11, int(kind))
    program.copy(12, 1).set(13, 0).set(14, 0).set(15, 0)
    program.ext(PrimitiveId.QUOTE, 6, 10)
    program.call(PrimitiveId.ORACLE, 7, (6, 4), scratch=8)
    program.jz(7, 'run').halt(3)

    program.label('run').simulate(0, 3, 4, scratch=8)
    return program.halt(0).code()


def _build(kind: SystemKind, oracle: Oracle, budget: int) -> DerivedSystem:
    defining_code = krt_plain(_diagonal_task(kind))
    logger.debug(
        '%s: defining code of %d bits',
        kind.name.lower(), bitlen(defining_code),
    )
    return DerivedSystem(
        tag=SystemTag(kind, defining_code),
        machine=build_system(oracle),
        oracle=oracle,
        budget=budget,
    )


def psi_build(oracle: Oracle, budget: int = DERIVED_BUDGET) -> DerivedSystem:
    """Builds ``ψ`` for the oracle."""
    return _build(SystemKind.PSI, oracle, budget)


def eta_build(oracle: Oracle, budget: int = DERIVED_BUDGET) -> DerivedSystem:
    """Builds ``η`` for the oracle."""
    return _build(SystemKind.ETA, oracle, budget)


def theta_build(
    oracle: Oracle,
    budget: int = DERIVED_BUDGET,
) -> DerivedSystem:
    """Builds ``θ`` for the oracle."""
    return _build(SystemKind.THETA, oracle, budget)


def diagonal_sentence(system: DerivedSystem) -> Sentence:
    """
    The sentence the system consults the oracle about.

    Raises:
        ValueError: when the system is not one of ``ψ``, ``η``, ``θ``.

    """
    template = DIAGONAL_TEMPLATES.get(system.tag.kind)
    if template is None:
        raise ValueError('{0} has no diagonal sentence'.format(system.name))
    return Sentence(template, system.tag)


def diagonal_clause(
    system: DerivedSystem,
    program: int,
    argument: int,
) -> Clause:
    """Which defining clause applies to ``sys_p(x)``."""
    exempt = (
        system.tag.kind == SystemKind.ETA and
        program == system.defining_code
    )
    if exempt:
        return Clause.exempt
    if oracle_query(system.oracle, diagonal_sentence(system), argument):
        return Clause.diagonal
    return Clause.not_proven
