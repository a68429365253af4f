# -*- coding: utf-8 -*-

from types import MappingProxyType
from typing import Mapping, Type

from typing_extensions import Final

from krt_toolkit.checks.base import BaseSuite
from krt_toolkit.checks.basesys import BasesysSuite
from krt_toolkit.checks.krt import KrtSuite
from krt_toolkit.checks.logic import LogicSuite
from krt_toolkit.checks.padding import PaddingSuite
from krt_toolkit.checks.pairing import PairingSuite
from krt_toolkit.checks.zeta import ZetaSuite

#: Every suite by its command line name, in the order they run:
SUITES: Final[Mapping[str, Type[BaseSuite]]] = MappingProxyType({
    suite.name: suite
    for suite in (
        PairingSuite,
        BasesysSuite,
        KrtSuite,
        PaddingSuite,
        LogicSuite,
        ZetaSuite,
    )
})
