# -*- coding: utf-8 -*-

"""
Budgeted provability ``T ⊢_x «E»`` as a pluggable oracle.

No theorem prover is included.
The constructions only need an oracle that is total, deterministic,
and monotone in the budget, so two implementations are provided:

- the silent oracle never proves anything,
  which is how a sound theory behaves on the sentences we quote
- the scripted oracle fires on chosen sentence patterns from a chosen
  budget onwards, which makes the counterfactual branches executable

Scripted firings are fixtures, not proofs.
"""

from typing import Iterable, Tuple

import attr
from typing_extensions import Protocol, final

from krt_toolkit.logic.patterns import SentencePattern
from krt_toolkit.logic.sentences import Sentence


class Oracle(Protocol):
    """Anything that answers budgeted provability queries."""

    def proves(self, sentence: Sentence, budget: int) -> bool:
        """Whether the sentence is proven within ``budget`` steps."""

    def describe(self) -> str:
        """Short human readable name."""


@final
@attr.dataclass(frozen=True, slots=True)
class SilentOracle(object):
    """Never proves anything."""

    def proves(self, sentence: Sentence, budget: int) -> bool:
        """Always ``False``."""
        return False

    def describe(self) -> str:
        """Short human readable name."""
        return 'silent'


@final
@attr.dataclass(frozen=True, slots=True)
class ScriptEntry(object):
    """Sentences matching ``pattern`` are proven from ``threshold`` on."""

    pattern: SentencePattern
    threshold: int = attr.ib()

    @threshold.validator
    def _check_threshold(self, attribute, field_value) -> None:
        if field_value < 0:
            raise ValueError('Firing budget must be natural, got: {0}'.format(
                field_value,
            ))


@final
@attr.dataclass(frozen=True, slots=True)
class OracleScript(object):
    """Ordered firing entries, each pattern is judged independently."""

    entries: Tuple[ScriptEntry, ...] = attr.ib(default=(), converter=tuple)


@final
@attr.dataclass(frozen=True, slots=True)
class ScriptedOracle(object):
    """Fires when some matching entry has a threshold within the budget."""

    script: OracleScript
    source: str = 'inline'

    def proves(self, sentence: Sentence, budget: int) -> bool:
        """Whether some entry matching the sentence fires by ``budget``."""
        return any(
            entry.threshold <= budget
            for entry in self.script.entries
            if entry.pattern.matches(sentence)
        )

    def describe(self) -> str:
        """Short human readable name."""
        return 'scripted:{0}'.format(self.source)


def make_silent() -> SilentOracle:
    """Returns the silent oracle."""
    return SilentOracle()


def make_scripted(
    script: OracleScript,
    source: str = 'inline',
) -> ScriptedOracle:
    """Returns the oracle induced by a script."""
    if not isinstance(script, OracleScript):
        raise TypeError('Expected an oracle script, got: {0!r}'.format(
            script,
        ))
    return ScriptedOracle(script, source)


def scripted_from(
    entries: Iterable[Tuple[SentencePattern, int]],
    source: str = 'inline',
) -> ScriptedOracle:
    """Shortcut that builds the script from ``(pattern, threshold)`` pairs."""
    return make_scripted(OracleScript(tuple(
        ScriptEntry(pattern, threshold) for pattern, threshold in entries
    )), source)


def oracle_query(oracle: Oracle, sentence: Sentence, budget: int) -> bool:
    """
    Asks whether ``sentence`` is proven within ``budget`` steps.

    Raises:
        ValueError: when the budget is negative.

    """
    if budget < 0:
        raise ValueError('Budget must be natural, got: {0}'.format(budget))
    return oracle.proves(sentence, budget)
