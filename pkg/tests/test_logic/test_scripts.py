# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.logic.oracles import ScriptedOracle, SilentOracle
from krt_toolkit.logic.scripts import (
    ScriptError,
    load_script,
    oracle_from_spec,
    parse_script,
)
from krt_toolkit.logic.sentences import parse_sentence


def test_load_script(absolute_path):
    """Ensures that comments and blank lines are skipped."""
    script = load_script(absolute_path('fixtures', 'scripts', 'diagonal.txt'))

    assert [entry.threshold for entry in script.entries] == [3, 3, 5]


def test_scripted_spec(absolute_path):
    """Ensures that ``scripted:`` specifications load their file."""
    path = absolute_path('fixtures', 'scripts', 'diagonal.txt')
    oracle = oracle_from_spec('scripted:' + path)

    assert isinstance(oracle, ScriptedOracle)
    assert oracle.describe() == 'scripted:' + path
    assert oracle.proves(parse_sentence('Equiv[phi](0, S(0))'), 5)
    assert not oracle.proves(parse_sentence('Equiv[phi](0, S(0))'), 4)


def test_silent_spec():
    """Ensures that ``silent`` names the silent oracle."""
    assert isinstance(oracle_from_spec('silent'), SilentOracle)


@pytest.mark.parametrize('spec', ['loud', 'scripted:', ''])
def test_unknown_specs(spec):
    """Ensures that unknown specifications are rejected."""
    with pytest.raises(ValueError):
        oracle_from_spec(spec)


def test_missing_file(absolute_path):
    """Ensures that missing files are reported by the system."""
    with pytest.raises(OSError):
        oracle_from_spec(
            'scripted:' + absolute_path('fixtures', 'scripts', 'missing.txt'),
        )


@pytest.mark.parametrize('text, line_number', [
    ('ExistsUniversal[theta:*]()\tthree', 1),
    ('# fine\nExistsUniversal[theta:*]()', 2),
    ('\nNothing[phi]()\t1', 2),
    ('Equiv[phi](*)\t1', 1),
])
def test_malformed_lines(text, line_number):
    """Ensures that errors name the offending line."""
    with pytest.raises(ScriptError) as exc_info:
        parse_script(text)

    assert exc_info.value.line_number == line_number
    assert str(exc_info.value).startswith('line {0}:'.format(line_number))


def test_malformed_file(absolute_path):
    """Ensures that entries need a tab between pattern and budget."""
    with pytest.raises(ScriptError):
        load_script(absolute_path('fixtures', 'scripts', 'no_tab.txt'))
