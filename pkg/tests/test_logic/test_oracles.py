# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.basesys.instructions import PrimitiveId
from krt_toolkit.basesys.outcomes import Halted, OutOfBudget
from krt_toolkit.logic.oracles import (
    OracleScript,
    ScriptEntry,
    make_scripted,
    make_silent,
    oracle_query,
    scripted_from,
)
from krt_toolkit.logic.patterns import (
    SentencePattern,
    exact_pattern,
    parse_pattern,
)
from krt_toolkit.logic.sentences import (
    PHI,
    Sentence,
    SystemKind,
    SystemTag,
    Template,
    parse_sentence,
)

PSI_SENTENCE = Sentence(
    Template.EXISTS_DISTINCT_EQUIV, SystemTag(SystemKind.PSI, 40),
)


@pytest.mark.parametrize('pattern, text, matches', [
    ('Equiv[phi](*, S(0))', 'Equiv[phi](0, S(0))', True),
    ('Equiv[phi](*, S(0))', 'Equiv[phi](0, 0)', False),
    ('ExistsDistinctEquiv[psi:*]()', 'ExistsDistinctEquiv[psi:0]()', True),
    ('ExistsDistinctEquiv[psi:*]()', 'ExistsDistinctEquiv[eta:0]()', False),
    ('IsUniversal[theta:S(0)](*)', 'IsUniversal[theta:0](0)', False),
    ('HaltsWith[phi](0, 0, 0)', 'HaltsWith[phi](0, 0, 0)', True),
])
def test_pattern_matching(pattern, text, matches):
    """Ensures that wildcards match any numeral and nothing else does."""
    assert parse_pattern(pattern).matches(parse_sentence(text)) is matches


@pytest.mark.parametrize('text', [
    'Equiv[phi](*, S(0))',
    'ExistsDistinctEquiv[psi:*]()',
    'HaltsWith[phi](0, *, *)',
])
def test_pattern_text(text):
    """Ensures that patterns print as they are written."""
    assert str(parse_pattern(text)) == text


@pytest.mark.parametrize('text', [
    'Equiv[phi](*)',
    'Equiv[phi](*,*)',
    'Equiv[psi:S(0](*, 0)',
    'Nothing',
])
def test_malformed_patterns(text):
    """Ensures that malformed patterns are rejected."""
    with pytest.raises(ValueError):
        parse_pattern(text)


def test_exact_pattern():
    """Ensures that exact patterns match their own sentence only."""
    pattern = exact_pattern(PSI_SENTENCE)

    assert pattern.matches(PSI_SENTENCE)
    assert not pattern.matches(Sentence(
        Template.EXISTS_DISTINCT_EQUIV, SystemTag(SystemKind.PSI, 41),
    ))


@pytest.mark.parametrize('budget', [0, 1, 10 ** 9])
def test_silent(budget):
    """Ensures that the silent oracle never proves anything."""
    assert not oracle_query(make_silent(), PSI_SENTENCE, budget)
    assert make_silent().describe() == 'silent'


@pytest.mark.parametrize('budget, proven', [
    (0, False),
    (2, False),
    (3, True),
    (10 ** 9, True),
])
def test_scripted_monotone(budget, proven):
    """Ensures that scripts fire from their threshold on."""
    oracle = scripted_from([(
        SentencePattern(Template.EXISTS_DISTINCT_EQUIV, SystemKind.PSI), 3,
    )])

    assert oracle_query(oracle, PSI_SENTENCE, budget) is proven
    assert not oracle_query(
        oracle, Sentence(Template.EQUIV, PHI, (1, 2)), budget,
    )


def test_entries_are_independent():
    """Ensures that every matching entry is judged on its own."""
    oracle = scripted_from([
        (SentencePattern(Template.EQUIV, SystemKind.PHI, None, (1, None)), 9),
        (SentencePattern(Template.EQUIV, SystemKind.PHI, None, (None, 2)), 4),
    ])

    assert oracle_query(oracle, Sentence(Template.EQUIV, PHI, (1, 2)), 4)
    assert not oracle_query(oracle, Sentence(Template.EQUIV, PHI, (1, 3)), 8)


def test_invalid_scripts():
    """Ensures that thresholds are natural and scripts are typed."""
    pattern = SentencePattern(Template.EXISTS_UNIVERSAL, SystemKind.THETA)
    with pytest.raises(ValueError):
        ScriptEntry(pattern, -1)
    with pytest.raises(TypeError):
        make_scripted([ScriptEntry(pattern, 1)])
    with pytest.raises(ValueError):
        oracle_query(make_scripted(OracleScript()), PSI_SENTENCE, -1)


def test_oracle_primitive(machine, oracle, program):
    """Ensures that programs quote sentences and consult the oracle."""
    def write(assembler):
        assembler.set(1, int(Template.EXISTS_DISTINCT_EQUIV))
        assembler.set(2, int(SystemKind.PSI)).set(3, 40)
        assembler.set(4, 0).set(5, 0).set(6, 0)
        assembler.ext(PrimitiveId.QUOTE, 7, 1)
        assembler.copy(8, 0).ext(PrimitiveId.ORACLE, 0, 7).halt(0)

    code = program(write)
    system = machine(oracle(('ExistsDistinctEquiv[psi:*]()', 3)))

    assert system.run(code, 2, 1000).value == 0
    assert system.run(code, 3, 1000).value == 1
    assert machine().run(code, 3, 1000).value == 0


def test_unknown_codes_are_never_proven(machine, oracle, program):
    """Ensures that codes naming no sentence give zero."""
    code = program(
        lambda assembler: assembler.set(1, 5).copy(2, 0).ext(
            PrimitiveId.ORACLE, 0, 1,
        ),
    )
    system = machine(oracle(('ExistsUniversal[theta:*]()', 0)))

    outcome = system.run(code, 7, 1000)
    assert isinstance(outcome, Halted)
    assert outcome.value == 0


@pytest.mark.parametrize('argument, budget, outcome', [
    (7, 10, Halted(0, 10)),
    (7, 9, OutOfBudget(9)),
    (0, 3, Halted(0, 3)),
    (10 ** 12, 1000, OutOfBudget(1000)),
])
def test_oracle_charges_its_budget(
    machine,
    oracle,
    program,
    argument,
    budget,
    outcome,
):
    """Ensures that a query costs the budget it searches."""
    code = program(
        lambda assembler: assembler.set(1, 5).copy(2, 0).ext(
            PrimitiveId.ORACLE, 0, 1,
        ),
    )
    system = machine(oracle(('ExistsUniversal[theta:*]()', 0)))

    assert system.run(code, argument, budget) == outcome
