# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.checks.base import BaseSuite, CheckResult, detail
from krt_toolkit.checks.presets import SUITES
from krt_toolkit.options.validation import CliConfig


@pytest.fixture(scope='module')
def small_config():
    """Configuration that keeps every suite fast."""
    return CliConfig(samples=3, range=16)


class _BrokenSuite(BaseSuite):
    name = 'broken'

    def check_fine(self):
        return True, 'fine'

    def check_deep(self):
        raise RecursionError('maximum recursion depth exceeded')

    def check_raising(self):
        raise ValueError(detail('φ_{0} did not halt', 1 << 20000))

    def check_wide(self):
        return False, detail('chain of {0}', 1 << 20000)


@pytest.mark.parametrize('suite_name', list(SUITES))
def test_suite_passes(small_config, suite_name):
    """Ensures that every suite passes on a small configuration."""
    results = SUITES[suite_name](small_config).run()

    assert results
    assert [result for result in results if not result.passed] == []
    assert {result.suite for result in results} == {suite_name}


def test_suite_names():
    """Ensures that suites are registered under their own names."""
    for suite_name, suite in SUITES.items():
        assert suite.name == suite_name


def test_checks_run_in_order(small_config):
    """Ensures that checks run alphabetically and errors become failures."""
    results = _BrokenSuite(small_config).run()

    assert results == [
        CheckResult(
            'broken',
            'deep',
            False,
            'error: RecursionError: maximum recursion depth exceeded',
        ),
        CheckResult('broken', 'fine', True, 'fine'),
        CheckResult(
            'broken',
            'raising',
            False,
            'error: ValueError: φ_0x80000000…<20001 bits> did not halt',
        ),
        CheckResult(
            'broken', 'wide', False, 'chain of 0x80000000…<20001 bits>',
        ),
    ]


@pytest.mark.parametrize('suite_name', ['pairing', 'krt'])
def test_seeded_reports(small_config, suite_name):
    """Ensures that the same seed gives the same report."""
    suite = SUITES[suite_name]

    assert suite(small_config).run() == suite(small_config).run()
