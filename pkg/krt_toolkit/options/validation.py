# -*- coding: utf-8 -*-

from typing import Optional

import attr
from typing_extensions import Final, final

from krt_toolkit.options import defaults

#: Largest explored range, the checks are quadratic in it.
MAX_EXPLORED_RANGE: Final = 1 << 16


def _min_max(
    min: Optional[int] = None,  # noqa: A002
    max: Optional[int] = None,  # noqa: A002
):
    """Validator to check that value is in bounds."""
    def factory(instance, attribute, field_value):
        min_contract = min is not None and field_value < min
        max_contract = max is not None and field_value > max
        if min_contract or max_contract:
            raise ValueError('Option {0} is out of bounds: {1}'.format(
                attribute.name,
                field_value,
            ))
    return factory


def _one_of(*allowed: str):
    """Validator to check that value is one of the allowed strings."""
    def factory(instance, attribute, field_value):
        if field_value not in allowed:
            raise ValueError('Option {0} must be one of {1}: {2}'.format(
                attribute.name,
                ', '.join(allowed),
                field_value,
            ))
    return factory


@final
@attr.dataclass(frozen=True, slots=True)
class CliConfig(object):
    """
    Validated options of one command line invocation.

    The seed fully determines every random selection.
    """

    budget: int = attr.ib(
        default=defaults.BUDGET, validator=[_min_max(min=0)],
    )
    derived_budget: int = attr.ib(
        default=defaults.DERIVED_BUDGET, validator=[_min_max(min=0)],
    )
    oracle: str = defaults.ORACLE
    range: int = attr.ib(  # noqa: A003
        default=defaults.EXPLORED_RANGE,
        validator=[_min_max(min=1, max=MAX_EXPLORED_RANGE)],
    )
    seed: int = attr.ib(default=defaults.SEED, validator=[_min_max(min=0)])
    samples: int = attr.ib(default=0, validator=[_min_max(min=0)])
    format: str = attr.ib(  # noqa: A003
        default=defaults.OUTPUT_FORMAT,
        validator=[_one_of('text', 'structured')],
    )

    def sample_count(self, prescribed: int) -> int:
        """Sample count of a check, honouring ``--samples``."""
        return self.samples or prescribed

    @property
    def structured(self) -> bool:
        """Whether records are printed as JSON lines."""
        return self.format == 'structured'
