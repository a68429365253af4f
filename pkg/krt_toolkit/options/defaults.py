# -*- coding: utf-8 -*-

"""
Constants with default values of the command line configuration.

Budgets are counted in machine steps.
The derived systems run whole simulations inside a single run,
so they get a larger budget than plain runs.
"""

from typing_extensions import Final

# Budgets:

#: Steps a plain run may take.
BUDGET: Final = 10 ** 6

#: Steps a run of a derived system may take.
DERIVED_BUDGET: Final = 10 ** 9

#: Padding steps the composition rewriting may try before it gives up.
PAD_SEARCH_CAP: Final = 10 ** 6


# Verification:

#: Arguments below this number form the explored range of ``w``.
EXPLORED_RANGE: Final = 512

#: Seed of every random selection.
SEED: Final = 0

#: Random samples of the pairing checks.
PAIRING_SAMPLES: Final = 10 ** 4

#: Random programs the combinator checks run on.
PROGRAM_SAMPLES: Final = 100

#: Codes the padding checks run on.
PADDING_SAMPLES: Final = 1000

#: Points each derived system is compared with the base system on.
TRANSPARENCY_SAMPLES: Final = 200


# Output:

#: Either ``text`` or ``structured``.
OUTPUT_FORMAT: Final = 'text'

#: Either ``silent`` or ``scripted:<path>``.
ORACLE: Final = 'silent'

#: Name of the environment variable that overrides the plain budget.
BUDGET_VARIABLE: Final = 'KRT_BUDGET'
