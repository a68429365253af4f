# -*- coding: utf-8 -*-

"""Diagonal constructions and the systems derived from the base one."""

from krt_toolkit.constructions.base import Clause, DerivedSystem  # noqa: F401
from krt_toolkit.constructions.chains import (  # noqa: F401
    Chain,
    chain,
    unchain,
)
from krt_toolkit.constructions.diagonal import (  # noqa: F401
    FixedPoint,
    Theorem1Candidates,
    fixed_point_demo,
    theorem1_candidates,
)
from krt_toolkit.constructions.systems import (  # noqa: F401
    diagonal_clause,
    diagonal_sentence,
    eta_build,
    psi_build,
    theta_build,
)
from krt_toolkit.constructions.zeta import (  # noqa: F401
    WitnessTable,
    compose,
    literal_w,
    literal_w_prime,
    witness_preimage,
    zeta_build,
    zeta_clause,
)
