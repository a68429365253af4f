# -*- coding: utf-8 -*-

import pytest

from krt_toolkit.constructions import zeta_build
from krt_toolkit.logic.oracles import make_silent, scripted_from
from krt_toolkit.logic.patterns import SentencePattern
from krt_toolkit.logic.sentences import SystemKind, Template

#: Budget from which scripted oracles fire in these tests.
FIRING_BUDGET = 3


@pytest.fixture(scope='session')
def diagonal_oracle():
    """Returns a builder of oracles proving one system's diagonal sentence."""
    def factory(template, kind, threshold=FIRING_BUDGET):
        return scripted_from([(SentencePattern(template, kind), threshold)])

    return factory


@pytest.fixture(scope='session')
def silent_zeta():
    """The ``ζ`` system under the silent oracle."""
    return zeta_build(make_silent())


@pytest.fixture(scope='session')
def scripted_zeta(diagonal_oracle):
    """The ``ζ`` system whose diagonal sentence is proven at budget 3."""
    return zeta_build(diagonal_oracle(
        Template.EXISTS_DISTINCT_EQUIV, SystemKind.ZETA,
    ))
