# -*- coding: utf-8 -*-

"""Sentences, numerals, and the budgeted provability oracle."""

from krt_toolkit.logic.numerals import (  # noqa: F401
    parse_numeral,
    render_numeral,
)
from krt_toolkit.logic.oracles import (  # noqa: F401
    Oracle,
    OracleScript,
    ScriptedOracle,
    ScriptEntry,
    SilentOracle,
    make_scripted,
    make_silent,
    oracle_query,
    scripted_from,
)
from krt_toolkit.logic.patterns import (  # noqa: F401
    SentencePattern,
    exact_pattern,
    parse_pattern,
)
from krt_toolkit.logic.primitives import logic_primitives  # noqa: F401
from krt_toolkit.logic.scripts import (  # noqa: F401
    ScriptError,
    load_script,
    oracle_from_spec,
    parse_script,
)
from krt_toolkit.logic.sentences import (  # noqa: F401
    PHI,
    Sentence,
    SystemKind,
    SystemTag,
    Template,
    parse_sentence,
    quote,
    substitute,
    unquote,
)
