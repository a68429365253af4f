# -*- coding: utf-8 -*-

import os
import random

import pytest

from krt_toolkit.checks.samples import random_programs
from krt_toolkit.combinators.assembler import Assembler
from krt_toolkit.logic.oracles import make_silent, scripted_from
from krt_toolkit.logic.patterns import parse_pattern
from krt_toolkit.system import build_system


@pytest.fixture(scope='session')
def absolute_path():
    """Fixture to create full path relative to `contest.py` inside tests."""
    def factory(*files):
        dirname = os.path.dirname(__file__)
        return os.path.join(dirname, *files)

    return factory


@pytest.fixture(scope='session')
def oracle():
    """
    Returns the oracle builder.

    Without arguments it builds the silent oracle,
    otherwise every ``(pattern, threshold)`` pair becomes a script entry.
    """
    def factory(*entries):
        if not entries:
            return make_silent()
        return scripted_from(
            (parse_pattern(pattern), threshold)
            for pattern, threshold in entries
        )

    return factory


@pytest.fixture(scope='session')
def machine(oracle):
    """Returns the base system builder, silent by default."""
    def factory(current_oracle=None, stepwise=False):
        return build_system(
            current_oracle if current_oracle is not None else oracle(),
            stepwise=stepwise,
        )

    return factory


@pytest.fixture(scope='session')
def program():
    """Returns a builder that assembles a program from a callback."""
    def factory(write):
        assembler = Assembler()
        write(assembler)
        return assembler.code()

    return factory


@pytest.fixture(scope='session')
def sample_programs():
    """Returns seeded total programs, stock ones first."""
    def factory(count, seed=0):
        return random_programs(random.Random(seed), count)

    return factory
