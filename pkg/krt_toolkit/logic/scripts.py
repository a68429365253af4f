# -*- coding: utf-8 -*-

"""
Oracle script files.

One entry per line: a sentence pattern, a tab, and a decimal firing budget.
Blank lines and lines starting with ``#`` are ignored::

    # psi proves that it has two equivalent programs at budget 3
    ExistsDistinctEquiv[psi:*]()	3

"""

import logging
from typing import List

from typing_extensions import Final

from krt_toolkit.logic.oracles import (
    Oracle,
    OracleScript,
    ScriptEntry,
    make_scripted,
    make_silent,
)
from krt_toolkit.logic.patterns import parse_pattern

logger = logging.getLogger(__name__)

#: Oracle specification that means "never proves anything".
SILENT_SPEC: Final = 'silent'

#: Prefix of the oracle specification that names a script file.
SCRIPTED_PREFIX: Final = 'scripted:'


class ScriptError(ValueError):
    """Raised for malformed oracle scripts."""

    def __init__(self, line_number: int, message: str) -> None:
        """Remembers where the problem is."""
        super().__init__('line {0}: {1}'.format(line_number, message))
        self.line_number = line_number


def parse_script(text: str) -> OracleScript:
    """
    Reads the text of an oracle script.

    >>> script = parse_script('# nothing\\nExistsUniversal[theta:*]()\\t3\\n')
    >>> script.entries[0].threshold
    3

    Raises:
        ScriptError: when a line is malformed.

    """
    entries: List[ScriptEntry] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        parts = line.rstrip('\r\n').split('\t')
        if len(parts) != 2:
            raise ScriptError(line_number, 'expected pattern<TAB>budget')
        pattern_text, threshold_text = (part.strip() for part in parts)
        if not threshold_text.isdigit():
            raise ScriptError(
                line_number,
                'budget must be decimal: {0!r}'.format(threshold_text),
            )
        try:
            pattern = parse_pattern(pattern_text)
        except ValueError as exc:
            raise ScriptError(line_number, str(exc))
        entries.append(ScriptEntry(pattern, int(threshold_text)))
    return OracleScript(tuple(entries))


def load_script(path: str) -> OracleScript:
    """
    Reads an oracle script file.

    Raises:
        ScriptError: when the file is malformed.
        OSError: when the file can not be read.

    """
    with open(path, encoding='utf-8') as script_file:
        script = parse_script(script_file.read())
    logger.debug('Loaded %d oracle entries from %s', len(script.entries), path)
    return script


def oracle_from_spec(spec: str) -> Oracle:
    """
    Builds the oracle named by ``silent`` or ``scripted:<path>``.

    Raises:
        ValueError: when the specification is unknown.

    """
    if spec == SILENT_SPEC:
        return make_silent()
    if spec.startswith(SCRIPTED_PREFIX):
        path = spec[len(SCRIPTED_PREFIX):]
        if not path:
            raise ValueError('Scripted oracle needs a path')
        return make_scripted(load_script(path), path)
    raise ValueError('Unknown oracle: {0}'.format(spec))
