# -*- coding: utf-8 -*-

"""
Assembles the base programming system.

The primitive registry is built once per oracle and never changes,
the machine validates that every primitive id is present.
"""

from types import MappingProxyType
from typing import Optional

from krt_toolkit.basesys.machine import Machine
from krt_toolkit.basesys.primitives import arithmetic_primitives
from krt_toolkit.combinators.padding import padding_primitives
from krt_toolkit.combinators.specialize import specialize_primitives
from krt_toolkit.logic.oracles import Oracle, make_silent
from krt_toolkit.logic.primitives import logic_primitives
from krt_toolkit.universal.simulation import simulation_primitive


def build_system(
    oracle: Optional[Oracle] = None,
    stepwise: bool = False,
) -> Machine:
    """
    Returns a machine with every primitive registered.

    >>> from krt_toolkit.combinators.stock import successor
    >>> build_system().run(successor(), 41, 10).value
    42

    """
    if oracle is None:
        oracle = make_silent()
    primitives = [
        simulation_primitive(),
        *logic_primitives(oracle),
        *specialize_primitives(),
        *padding_primitives(),
        *arithmetic_primitives(),
    ]
    return Machine(
        MappingProxyType({
            primitive.identifier: primitive for primitive in primitives
        }),
        stepwise=stepwise,
    )
