# -*- coding: utf-8 -*-

"""
A system with a composition witness ``w``.

Four programs come from one application of mixed recursion:
tasks ``e``, ``w′``, ``w`` and the delayed program ``c``.
Every task receives ``⟨e, w′, w, c, payload⟩``.

- ``ζ_p(x) = φ_e(⟨p, x⟩)``. It runs ``φ_p(x)``
  unless the oracle proves ``ExistsDistinctEquiv[ζ]`` within ``x``,
  ``p ≠ w`` and ``p`` is not an output of ``w``;
  then it is ``prime(p + 1) ** x``.
- ``φ_φc(⟨p, q⟩) = ζ_p ∘ ζ_q``.
- ``φ_w′(n)`` is the first padding of ``φ_c(n)`` that differs from ``w``,
  is even, exceeds ``n`` and ``φ_w′(n - 1)``, and whose halves
  are no earlier outputs of ``w′``.
- ``φ_w(⟨p, q⟩) = φ_w(⟨φ_w(⟨p, r⟩), s⟩)``
  when ``q = φ_w(⟨r, s⟩)``, otherwise ``φ_w′(⟨p, q⟩)``.

``φ_c(n)`` is ``smn(d, n + 4)`` for the dispatcher ``d``.
Membership in the ranges of ``w′`` and ``w`` is decided
by cutting that stored argument out of a code with ``SPLIT``
and checking the candidate preimage by simulation.

The literal evaluators at the bottom of the module follow
the defining clauses on the host, so the suites can compare
both on an explored range.
"""

import functools
import logging
from typing import Dict, List, Optional, Set, Tuple

import attr
from typing_extensions import Final, final

from krt_toolkit.basesys.instructions import PrimitiveId
from krt_toolkit.basesys.outcomes import Halted
from krt_toolkit.combinators.assembler import Assembler
from krt_toolkit.combinators.padding import pad
from krt_toolkit.combinators.recursion import mixed_rt
from krt_toolkit.combinators.specialize import split_stored
from krt_toolkit.constructions.base import Clause, DerivedSystem
from krt_toolkit.logic.oracles import Oracle, oracle_query
from krt_toolkit.logic.sentences import (
    Sentence,
    SystemKind,
    SystemTag,
    Template,
)
from krt_toolkit.numcode import bitlen, nth_prime, pair, short_text, unpair
from krt_toolkit.options.defaults import DERIVED_BUDGET, PAD_SEARCH_CAP
from krt_toolkit.system import build_system

logger = logging.getLogger(__name__)

#: Number of tasks, ``φ_c(n)`` stores ``n`` shifted by one more than this.
_TASKS: Final = 3

#: Shift between ``n`` and the argument ``φ_c(n)`` stores.
_SHIFT: Final = _TASKS + 1

#: Registers the membership tests work in.
_WORK: Final = 30

#: Scratch registers of primitive calls.
_SCRATCH: Final = 40

# Registers after the prologue.
_E, _W_PRIME, _W, _C, _PAYLOAD, _D = 1, 2, 3, 4, 5, 6


def _prologue(program: Assembler) -> Assembler:
    program.unpair(_E, 2, 0).unpair(_W_PRIME, 3, 2)
    program.unpair(_W, 4, 3).unpair(_C, _PAYLOAD, 4)
    program.call(PrimitiveId.SPLIT, _D, (_C,), scratch=_SCRATCH)
    return program.dec(_D).unpair(_D, 7, _D)


def _jump_unless_zero(
    program: Assembler,
    register: int,
    target: str,
) -> Assembler:
    skip = program.fresh('zero')
    return program.jz(register, skip).jmp(target).label(skip)


def _invert_w_prime(
    program: Assembler,
    target: int,
    result: int,
    fail: str,
    below: Optional[int] = None,
) -> Assembler:
    # result := x with φ_w′(x) = target and x < below, or jump to fail
    split, stored, argument, flag, bound, candidate = range(_WORK, _WORK + 6)
    program.call(PrimitiveId.SPLIT, split, (target,), scratch=_SCRATCH)
    program.jz(split, fail).dec(split).unpair(stored, argument, split)
    program.call(PrimitiveId.EQUAL, flag, (stored, _D), scratch=_SCRATCH)
    program.jz(flag, fail).set(bound, _SHIFT)
    program.call(PrimitiveId.LESS, flag, (argument, bound), scratch=_SCRATCH)
    _jump_unless_zero(program, flag, fail).copy(candidate, argument)
    for _ in range(_SHIFT):
        program.dec(candidate)
    if below is not None:
        program.call(
            PrimitiveId.LESS, flag, (candidate, below), scratch=_SCRATCH,
        )
        program.jz(flag, fail)
    program.simulate(flag, _W_PRIME, candidate, scratch=_SCRATCH)
    program.call(PrimitiveId.EQUAL, flag, (flag, target), scratch=_SCRATCH)
    return program.jz(flag, fail).copy(result, candidate)


def _invert_w(
    program: Assembler,
    target: int,
    result: int,
    fail: str,
) -> Assembler:
    # result := x with φ_w(x) = target, or jump to fail
    flag = _WORK + 3
    _invert_w_prime(program, target, result, fail)
    program.simulate(flag, _W, result, scratch=_SCRATCH)
    program.call(PrimitiveId.EQUAL, flag, (flag, target), scratch=_SCRATCH)
    return program.jz(flag, fail)


@functools.lru_cache(maxsize=None)
def _zeta_task() -> int:
    program = _prologue(Assembler()).unpair(7, 8, _PAYLOAD)
    # r7 = p, r8 = x
    program.set(20, int(Template.EXISTS_DISTINCT_EQUIV))
    program.set(21, int(SystemKind.ZETA)).copy(22, _E)
    program.set(23, 0).set(24, 0).set(25, 0)
    program.ext(PrimitiveId.QUOTE, 9, 20)
    program.call(PrimitiveId.ORACLE, 10, (9, 8), scratch=_SCRATCH)
    program.jz(10, 'run')
    program.call(PrimitiveId.EQUAL, 10, (7, _W), scratch=_SCRATCH)
    _jump_unless_zero(program, 10, 'run')
    _invert_w(program, 7, 11, fail='diagonal').jmp('run')

    program.label('diagonal').copy(12, 7).inc(12)
    program.call(PrimitiveId.PRIME, 13, (12,), scratch=_SCRATCH)
    program.call(PrimitiveId.POWER, 0, (13, 8), scratch=_SCRATCH).halt(0)

    program.label('run').simulate(0, 7, 8, scratch=_SCRATCH)
    return program.halt(0).code()


@functools.lru_cache(maxsize=None)
def _composition_task() -> int:
    # payload is ⟨⟨p, q⟩, y⟩, the result is ζ_p(ζ_q(y))
    program = _prologue(Assembler()).unpair(7, 8, _PAYLOAD).unpair(9, 10, 7)
    program.pair(11, 10, 8).simulate(12, _E, 11, scratch=_SCRATCH)
    program.pair(13, 9, 12).simulate(0, _E, 13, scratch=_SCRATCH)
    return program.halt(0).code()


def _previous_output(program: Assembler) -> Assembler:
    # r11 := φ_c(n - 1) padded until it is a valid predecessor of r8
    count, previous, flag = 10, 11, 13
    program.copy(count, _PAYLOAD).dec(count)
    program.simulate(previous, _C, count, scratch=_SCRATCH)
    program.label('previous')
    program.call(PrimitiveId.EQUAL, flag, (previous, _W), scratch=_SCRATCH)
    _jump_unless_zero(program, flag, 'previous.pad')
    program.call(PrimitiveId.PARITY, flag, (previous,), scratch=_SCRATCH)
    _jump_unless_zero(program, flag, 'previous.pad')
    program.call(PrimitiveId.LESS, flag, (count, previous), scratch=_SCRATCH)
    program.jz(flag, 'previous.pad').jmp('search')
    program.label('previous.pad').ext(PrimitiveId.PAD, previous, previous)
    return program.jmp('previous')


@functools.lru_cache(maxsize=None)
def _rewrite_task(cap: int) -> int:
    candidate, counter, previous, flag, limit = 8, 9, 11, 13, 19
    program = _prologue(Assembler())
    program.simulate(candidate, _C, _PAYLOAD, scratch=_SCRATCH)
    program.set(counter, 0).set(limit, cap)
    program.jz(_PAYLOAD, 'search')
    _previous_output(program)

    program.label('search')
    program.call(PrimitiveId.LESS, flag, (counter, limit), scratch=_SCRATCH)
    program.jz(flag, 'exhausted').inc(counter)
    program.call(PrimitiveId.EQUAL, flag, (candidate, _W), scratch=_SCRATCH)
    _jump_unless_zero(program, flag, 'next')
    program.call(PrimitiveId.PARITY, flag, (candidate,), scratch=_SCRATCH)
    _jump_unless_zero(program, flag, 'next')
    program.call(
        PrimitiveId.LESS, flag, (_PAYLOAD, candidate), scratch=_SCRATCH,
    )
    program.jz(flag, 'next').jz(_PAYLOAD, 'halves')
    program.call(
        PrimitiveId.LESS, flag, (previous, candidate), scratch=_SCRATCH,
    )
    program.jz(flag, 'next')

    program.label('halves').unpair(14, 15, candidate)
    for half in (14, 15):
        fresh = program.fresh('half')
        _invert_w_prime(program, half, 16, fail=fresh, below=_PAYLOAD)
        program.jmp('next').label(fresh)
    program.halt(candidate)

    program.label('next').ext(PrimitiveId.PAD, candidate, candidate)
    program.jmp('search')
    program.label('exhausted').jmp('exhausted')
    return program.code()


@functools.lru_cache(maxsize=None)
def _witness_task() -> int:
    program = _prologue(Assembler()).unpair(7, 8, _PAYLOAD)
    # r7 = p, r8 = q
    _invert_w(program, 8, 9, fail='plain').unpair(10, 11, 9)
    program.pair(12, 7, 10).simulate(13, _W, 12, scratch=_SCRATCH)
    program.pair(14, 13, 11).simulate(0, _W, 14, scratch=_SCRATCH)
    program.halt(0)

    program.label('plain').pair(15, 7, 8)
    program.simulate(0, _W_PRIME, 15, scratch=_SCRATCH)
    return program.halt(0).code()


@functools.lru_cache(maxsize=None)
def _zeta_codes(cap: int) -> Tuple[int, int, int, int]:
    recursion = mixed_rt(
        (_zeta_task(), _rewrite_task(cap), _witness_task()),
        _composition_task(),
    )
    defining_code, w_prime, witness = recursion.indices
    return defining_code, recursion.delayed, w_prime, witness


def zeta_build(
    oracle: Oracle,
    budget: int = DERIVED_BUDGET,
    cap: int = PAD_SEARCH_CAP,
) -> DerivedSystem:
    """
    Builds ``ζ`` with the helper codes ``c``, ``w_prime`` and ``w``.

    ``cap`` bounds the padding search of ``w′``,
    a search that reaches it never halts.
    """
    defining_code, delayed, w_prime, witness = _zeta_codes(cap)
    logger.debug(
        'zeta: codes of %d, %d, %d and %d bits',
        bitlen(defining_code), bitlen(delayed),
        bitlen(w_prime), bitlen(witness),
    )
    return DerivedSystem(
        tag=SystemTag(SystemKind.ZETA, defining_code),
        machine=build_system(oracle),
        oracle=oracle,
        budget=budget,
        auxiliary={'c': delayed, 'w_prime': w_prime, 'w': witness},
    )


def _run_value(system: DerivedSystem, program: int, argument: int) -> int:
    outcome = system.machine.run(program, argument, system.budget)
    if not isinstance(outcome, Halted):
        raise ValueError(
            'φ_{0}({1}) did not halt within {2} steps: {3}'.format(
                *map(short_text, (program, argument, system.budget, outcome)),
            ),
        )
    return outcome.value


def compose(system: DerivedSystem, first: int, second: int) -> int:
    """
    Returns ``φ_w(⟨p, q⟩)``, a ``ζ``-program for ``ζ_p ∘ ζ_q``.

    Raises:
        ValueError: when ``w`` does not halt within the system budget.

    """
    return _run_value(system, system.auxiliary['w'], pair(first, second))


def _dispatcher(system: DerivedSystem) -> int:
    return unpair(split_stored(system.auxiliary['c']) - 1)[0]


def witness_preimage(system: DerivedSystem, code: int) -> Optional[int]:
    """
    Returns ``x`` with ``φ_w(x) = code`` if ``code`` is an output of ``w``.

    Raises:
        ValueError: when ``w`` or ``w′`` does not halt within the budget.

    """
    split = split_stored(code)
    if not split:
        return None
    stored, argument = unpair(split - 1)
    if stored != _dispatcher(system) or argument < _SHIFT:
        return None
    preimage = argument - _SHIFT
    for helper in ('w_prime', 'w'):
        if _run_value(system, system.auxiliary[helper], preimage) != code:
            return None
    return preimage


def zeta_sentence(system: DerivedSystem) -> Sentence:
    """The sentence ``ζ`` consults the oracle about."""
    return Sentence(Template.EXISTS_DISTINCT_EQUIV, system.tag)


def zeta_clause(system: DerivedSystem, program: int, argument: int) -> Clause:
    """Which defining clause applies to ``ζ_p(x)``."""
    if not oracle_query(system.oracle, zeta_sentence(system), argument):
        return Clause.not_proven
    if program == system.auxiliary['w']:
        return Clause.exempt
    if witness_preimage(system, program) is not None:
        return Clause.exempt
    return Clause.diagonal


def diagonal_value(program: int, argument: int) -> int:
    """
    Output of the diagonal clause of ``ζ``.

    >>> diagonal_value(0, 3)
    27

    """
    return nth_prime(program + 1) ** argument


def literal_w_prime(
    system: DerivedSystem,
    limit: int,
    cap: int = PAD_SEARCH_CAP,
) -> List[int]:
    """
    Evaluates ``φ_w′`` on ``0 … limit - 1`` clause by clause.

    Raises:
        ValueError: when a search reaches ``cap``,
            or ``c`` does not halt within the budget.

    """
    witness = system.auxiliary['w']
    outputs: List[int] = []
    seen: Dict[int, int] = {}
    for number in range(limit):
        candidate = _run_value(system, system.auxiliary['c'], number)
        for _ in range(cap):
            if _acceptable(candidate, number, outputs, seen, witness):
                break
            candidate = pad(candidate)
        else:
            raise ValueError('Padding search for {0} reached {1}'.format(
                number, cap,
            ))
        seen[candidate] = number
        outputs.append(candidate)
    return outputs


def _acceptable(
    candidate: int,
    number: int,
    outputs: List[int],
    seen: Dict[int, int],
    witness: int,
) -> bool:
    if candidate == witness or candidate % 2 or candidate <= number:
        return False
    if outputs and candidate <= outputs[-1]:
        return False
    return all(half not in seen for half in unpair(candidate))


@final
@attr.dataclass(frozen=True, slots=True)
class WitnessTable(object):
    """
    ``φ_w`` on an explored range, evaluated clause by clause.

    Attributes:
        outputs: ``φ_w(n)`` for every ``n`` below the range.
        ties: outputs ``q`` that more than one ``⟨r, s⟩ < q`` produces.

    """

    outputs: Tuple[int, ...]
    ties: Tuple[int, ...]


def literal_w(
    system: DerivedSystem,
    w_prime_outputs: List[int],
) -> WitnessTable:
    """
    Evaluates ``φ_w`` on the range ``w_prime_outputs`` covers.

    Among the ``⟨r, s⟩ < q`` with ``φ_w(⟨r, s⟩) = q``
    the smallest ``s`` is selected and then the smallest ``r``.
    Arguments beyond the range are handed to the machine.
    """
    outputs: List[int] = []
    ties: Set[int] = set()

    def lookup(argument: int) -> int:
        if argument < len(outputs):
            return outputs[argument]
        return _run_value(system, system.auxiliary['w'], argument)

    for number in range(len(w_prime_outputs)):
        program, code = unpair(number)
        preimages = [
            unpair(argument)
            for argument in range(code)
            if outputs[argument] == code
        ]
        if len(preimages) > 1:
            ties.add(code)
        if not preimages:
            outputs.append(w_prime_outputs[number])
            continue
        rest, last = min(preimages, key=lambda parts: (parts[1], parts[0]))
        inner = lookup(pair(program, rest))
        outputs.append(lookup(pair(inner, last)))
    return WitnessTable(tuple(outputs), tuple(sorted(ties)))
