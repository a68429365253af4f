# -*- coding: utf-8 -*-

"""
The base programming system φ and its step-counting measure Φ.

A :class:`Machine` runs program codes on inputs within a budget.
One step is one dispatched instruction.
``EXT`` costs one step plus the declared cost of the primitive.

There are two ways to execute the same semantics:

- the accelerated loop works on pre-decoded instruction tuples
  and remembers the results of halted runs
- the stepwise interpreter applies :meth:`Machine.step`
  to immutable :class:`MachineState` values

Both give identical outcomes, step counts included.

Nested runs requested by a primitive with :class:`Subrun`
are pushed on an explicit frame stack instead of the host stack,
so a program that simulates itself runs out of budget, not of stack.
Every top level run starts with an empty memo and an empty stack,
a :class:`Machine` holds no mutable state.
"""

import functools
from typing import Dict, List, Mapping, Optional, Tuple, Union

import attr
from typing_extensions import final

from krt_toolkit.basesys.encoding import ProgramBody, decode_program
from krt_toolkit.basesys.instructions import Instruction, Opcode, PrimitiveId
from krt_toolkit.basesys.outcomes import (
    AbnormalDivergence,
    Halted,
    OutOfBudget,
    RunOutcome,
)
from krt_toolkit.basesys.primitives import Primitive, Subrun
from krt_toolkit.numcode import pair, unpair

#: Pre-decoded instruction: opcode and three operand slots.
_Operation = Tuple[int, int, int, int]

#: Halted runs of one top level run, by program and argument.
_Memo = Dict[Tuple[int, int], Tuple[int, int]]


@final
@attr.dataclass(frozen=True, slots=True)
class _Loaded(object):
    operations: Tuple[_Operation, ...]
    width: int


@functools.lru_cache(maxsize=4096)
def _load(code: int) -> Optional[_Loaded]:
    body = decode_program(code)
    if not isinstance(body, ProgramBody):
        return None
    operations = tuple(
        (int(instruction.opcode), *instruction.operands, 0, 0, 0)[:4]
        for instruction in body.instructions
    )
    return _Loaded(operations, body.width)


@final
@attr.dataclass(slots=True)
class _Frame(object):
    """One accelerated run on the frame stack."""

    code: int
    argument: int
    loaded: _Loaded
    budget: int
    registers: List[int]
    counter: int = 0
    steps: int = 0
    waiting: int = 0


@final
@attr.dataclass(frozen=True, slots=True)
class PendingRun(object):
    """A nested run a stepwise state waits for."""

    destination: int
    request: Subrun


@final
@attr.dataclass(frozen=True, slots=True)
class MachineState(object):
    """Snapshot of a stepwise run."""

    body: ProgramBody
    registers: Tuple[int, ...]
    budget: int
    counter: int = 0
    steps: int = 0
    outcome: Optional[RunOutcome] = None
    pending: Optional[PendingRun] = None


@final
@attr.dataclass(frozen=True, slots=True)
class Machine(object):
    """
    Runs program codes.

    Attributes:
        primitives: the frozen registry of ``EXT`` primitives.
        stepwise: whether runs go through :meth:`step`.

    """

    primitives: Mapping[int, Primitive] = attr.ib()
    stepwise: bool = False

    @primitives.validator
    def _check_primitives(self, attribute, registry) -> None:
        missing = set(PrimitiveId) - set(registry)
        if missing:
            raise ValueError('Primitives are not registered: {0}'.format(
                sorted(identifier.name for identifier in missing),
            ))

    def stepwise_twin(self) -> 'Machine':
        """The same system executed through :meth:`step`."""
        return Machine(self.primitives, stepwise=True)

    def run(self, code: int, argument: int, budget: int) -> RunOutcome:
        """
        Runs program ``code`` on ``argument`` for at most ``budget`` steps.

        Raises:
            ValueError: when a number is negative.

        """
        if min(code, argument, budget) < 0:
            raise ValueError('Run needs natural numbers: {0}'.format(
                (code, argument, budget),
            ))
        if self.stepwise:
            return self._run_stepwise(code, argument, budget)
        return self._run_accelerated(code, argument, budget)

    def start(
        self,
        body: ProgramBody,
        argument: int,
        budget: int,
    ) -> MachineState:
        """Initial state of a stepwise run."""
        registers = [0] * body.width
        registers[0] = argument
        return MachineState(body, tuple(registers), budget)

    def step(self, state: MachineState) -> MachineState:
        """
        Performs one small step, final states are returned unchanged.

        A state waiting for a nested run gets the whole nested run
        as its step.
        """
        if state.outcome is not None:
            return state
        if state.pending is not None:
            request = state.pending.request
            return self.resume(state, self._run_stepwise(
                request.program,
                request.argument,
                state.budget - state.steps,
            ))
        instructions = state.body.instructions
        if state.counter >= len(instructions):
            return attr.evolve(
                state, outcome=Halted(state.registers[0], state.steps),
            )
        if state.steps >= state.budget:
            return attr.evolve(state, outcome=OutOfBudget(state.budget))
        return self._execute(
            attr.evolve(
                state, counter=state.counter + 1, steps=state.steps + 1,
            ),
            instructions[state.counter],
        )

    def resume(self, state: MachineState, outcome: RunOutcome) -> MachineState:
        """Hands the outcome of a nested run to the state waiting for it."""
        if state.pending is None:
            raise ValueError('State does not wait for a nested run')
        if not isinstance(outcome, Halted):
            return attr.evolve(
                state, pending=None, outcome=OutOfBudget(state.budget),
            )
        registers = list(state.registers)
        registers[state.pending.destination] = outcome.value
        return attr.evolve(
            state,
            pending=None,
            registers=tuple(registers),
            steps=state.steps + outcome.steps,
        )

    def _run_stepwise(
        self,
        code: int,
        argument: int,
        budget: int,
    ) -> RunOutcome:
        body = decode_program(code)
        if not isinstance(body, ProgramBody):
            return AbnormalDivergence()
        states = [self.start(body, argument, budget)]
        while True:
            state = states[-1]
            if state.outcome is not None:
                states.pop()
                if not states:
                    return state.outcome
                states[-1] = self.resume(states[-1], state.outcome)
            elif state.pending is not None:
                request = state.pending.request
                nested = decode_program(request.program)
                if isinstance(nested, ProgramBody):
                    states.append(self.start(
                        nested, request.argument, state.budget - state.steps,
                    ))
                else:
                    states[-1] = self.resume(state, AbnormalDivergence())
            else:
                states[-1] = self.step(state)

    def _execute(  # noqa: C901, WPS231
        self,
        state: MachineState,
        instruction: Instruction,
    ) -> MachineState:
        opcode = instruction.opcode
        operands = instruction.operands
        registers = list(state.registers)
        if opcode == Opcode.HALT:
            return attr.evolve(
                state, outcome=Halted(registers[operands[0]], state.steps),
            )
        elif opcode == Opcode.JZ:
            if registers[operands[0]] == 0:
                return attr.evolve(state, counter=operands[1])
            return state
        elif opcode == Opcode.JMP:
            return attr.evolve(state, counter=operands[0])
        elif opcode == Opcode.EXT:
            return self._execute_primitive(state, registers, operands)

        if opcode == Opcode.INC:
            registers[operands[0]] += 1
        elif opcode == Opcode.DEC:
            registers[operands[0]] = max(registers[operands[0]] - 1, 0)
        elif opcode == Opcode.COPY:
            registers[operands[0]] = registers[operands[1]]
        elif opcode == Opcode.SET:
            registers[operands[0]] = operands[1]
        elif opcode == Opcode.PAIR:
            registers[operands[0]] = pair(
                registers[operands[1]], registers[operands[2]],
            )
        elif opcode == Opcode.UNPAIR:
            first, second = unpair(registers[operands[2]])
            registers[operands[0]] = first
            registers[operands[1]] = second
        return attr.evolve(state, registers=tuple(registers))

    def _execute_primitive(
        self,
        state: MachineState,
        registers: List[int],
        operands: Tuple[int, ...],
    ) -> MachineState:
        identifier, destination, source = operands
        primitive = self.primitives[identifier]
        charged = primitive.invoke(
            self,
            tuple(registers[source:source + primitive.arity]),
            state.budget - state.steps,
        )
        if charged is None:
            return attr.evolve(state, outcome=OutOfBudget(state.budget))
        if isinstance(charged, Subrun):
            return attr.evolve(
                state, pending=PendingRun(destination, charged),
            )
        registers[destination] = charged.value
        return attr.evolve(
            state,
            registers=tuple(registers),
            steps=state.steps + charged.cost,
        )

    def _run_accelerated(
        self,
        code: int,
        argument: int,
        budget: int,
    ) -> RunOutcome:
        memo: _Memo = {}
        recalled = _recall(memo, code, argument, budget)
        if not isinstance(recalled, _Loaded):
            return recalled
        frames = [_frame(code, argument, recalled, budget)]
        while True:
            frame = frames[-1]
            reported = self._advance(frame)
            if isinstance(reported, Subrun):
                allowance = frame.budget - frame.steps
                nested = _recall(
                    memo, reported.program, reported.argument, allowance,
                )
                if isinstance(nested, _Loaded):
                    frames.append(_frame(
                        reported.program, reported.argument, nested, allowance,
                    ))
                    continue
                outcome = nested
            else:
                outcome = reported
                frames.pop()
                if isinstance(outcome, Halted):
                    memo[(frame.code, frame.argument)] = (
                        outcome.value, outcome.steps,
                    )
                if not frames:
                    return outcome
            if not isinstance(outcome, Halted):
                # every caller spent its remaining allowance on this run
                return OutOfBudget(budget)
            caller = frames[-1]
            caller.registers[caller.waiting] = outcome.value
            caller.steps += outcome.steps

    def _advance(  # noqa: C901, WPS210, WPS231
        self,
        frame: _Frame,
    ) -> Union[RunOutcome, Subrun]:
        registers = frame.registers
        operations = frame.loaded.operations
        size = len(operations)
        primitives = self.primitives
        budget = frame.budget
        counter = frame.counter
        steps = frame.steps
        while counter < size:
            if steps >= budget:
                return OutOfBudget(budget)
            steps += 1
            opcode, first, second, third = operations[counter]
            counter += 1
            if opcode == Opcode.SET:
                registers[first] = second
            elif opcode == Opcode.COPY:
                registers[first] = registers[second]
            elif opcode == Opcode.JZ:
                if registers[first] == 0:
                    counter = second
            elif opcode == Opcode.JMP:
                counter = first
            elif opcode == Opcode.INC:
                registers[first] += 1
            elif opcode == Opcode.DEC:
                if registers[first]:
                    registers[first] -= 1
            elif opcode == Opcode.PAIR:
                registers[first] = pair(registers[second], registers[third])
            elif opcode == Opcode.UNPAIR:
                left, right = unpair(registers[third])
                registers[first] = left
                registers[second] = right
            elif opcode == Opcode.EXT:
                primitive = primitives[first]
                charged = primitive.invoke(
                    self,
                    tuple(registers[third:third + primitive.arity]),
                    budget - steps,
                )
                if charged is None:
                    return OutOfBudget(budget)
                if isinstance(charged, Subrun):
                    frame.counter = counter
                    frame.steps = steps
                    frame.waiting = second
                    return charged
                steps += charged.cost
                registers[second] = charged.value
            elif opcode == Opcode.HALT:
                return Halted(registers[first], steps)
        return Halted(registers[0], steps)


def _frame(code: int, argument: int, loaded: _Loaded, budget: int) -> _Frame:
    registers = [0] * loaded.width
    registers[0] = argument
    return _Frame(code, argument, loaded, budget, registers)


def _recall(
    memo: _Memo,
    code: int,
    argument: int,
    budget: int,
) -> Union[RunOutcome, _Loaded]:
    remembered = memo.get((code, argument))
    if remembered is not None:
        value, steps = remembered
        if steps <= budget:
            return Halted(value, steps)
        return OutOfBudget(budget)
    loaded = _load(code)
    if loaded is None:
        return AbnormalDivergence()
    return loaded


def blum_cost(
    machine: Machine,
    code: int,
    argument: int,
    budget: int,
) -> Union[int, OutOfBudget, AbnormalDivergence]:
    """Returns Φ_p(x) when the run halts within the budget."""
    outcome = machine.run(code, argument, budget)
    if isinstance(outcome, Halted):
        return outcome.steps
    return outcome
