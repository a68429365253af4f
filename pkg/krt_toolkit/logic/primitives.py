# -*- coding: utf-8 -*-

"""
Primitives that let programs quote sentences and consult the oracle.

``QUOTE`` joins six registers into a sentence register code.
``ORACLE`` answers ``1`` when the quoted sentence is proven
within the budget in its second argument, ``0`` otherwise.
Codes that name no sentence are never proven.

``QUOTE`` is charged by the bit length of its fields,
``ORACLE`` by the budget the proof search consumes.
"""

from typing import List

from krt_toolkit.basesys.instructions import PrimitiveId
from krt_toolkit.basesys.primitives import Primitive, total_primitive
from krt_toolkit.logic.oracles import Oracle, oracle_query
from krt_toolkit.logic.sentences import Sentence, quote
from krt_toolkit.numcode import bitlen


def _quote_cost(*fields: int) -> int:
    return sum(bitlen(field) for field in fields)


def logic_primitives(oracle: Oracle) -> List[Primitive]:
    """The ``QUOTE`` and ``ORACLE`` primitives for the given oracle."""
    def ask(sentence_code: int, budget: int) -> int:
        try:
            sentence = Sentence.from_code(sentence_code)
        except ValueError:
            return 0
        return int(oracle_query(oracle, sentence, budget))

    return [
        total_primitive(
            PrimitiveId.QUOTE,
            lambda *fields: quote(fields),
            _quote_cost,
        ),
        total_primitive(
            PrimitiveId.ORACLE,
            ask,
            lambda sentence_code, budget: budget,
        ),
    ]
