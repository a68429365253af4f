# -*- coding: utf-8 -*-

"""Universal program, simulation modes, and halting certificates."""

from krt_toolkit.universal.certificates import (  # noqa: F401
    Certificate,
    certificate_from_record,
    certificate_to_record,
    emit_certificate,
    minimal_certificate_budget,
    verify_certificate,
)
from krt_toolkit.universal.simulation import (  # noqa: F401
    UNIVERSAL_OVERHEAD,
    Mode,
    compare_modes,
    simulate,
    simulation_primitive,
    universal_code,
)
