# -*- coding: utf-8 -*-

"""Program building control structures over base system codes."""

from krt_toolkit.combinators.assembler import Assembler  # noqa: F401
from krt_toolkit.combinators.control import (  # noqa: F401
    comp_m,
    if_then_else,
)
from krt_toolkit.combinators.fitting import fit_overhead  # noqa: F401
from krt_toolkit.combinators.padding import (  # noqa: F401
    PaddedOnce,
    PaddingCase,
    pad,
    pad_once,
    pad_once_traced,
    padding_primitives,
)
from krt_toolkit.combinators.recursion import (  # noqa: F401
    MixedRecursion,
    krt,
    krt_plain,
    mixed_rt,
)
from krt_toolkit.combinators.specialize import (  # noqa: F401
    smn,
    specialize_primitives,
    split_stored,
)
