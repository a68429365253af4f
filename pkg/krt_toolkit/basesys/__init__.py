# -*- coding: utf-8 -*-

"""The base programming system: instructions, numbering and execution."""

from krt_toolkit.basesys.encoding import (  # noqa: F401
    ABNORMAL,
    CODE_MODULUS,
    Abnormal,
    CodeClass,
    Normal,
    ProgramBody,
    classify,
    decode_program,
    encode_program,
    format_listing,
)
from krt_toolkit.basesys.instructions import (  # noqa: F401
    Instruction,
    Opcode,
    PrimitiveId,
)
from krt_toolkit.basesys.machine import (  # noqa: F401
    Machine,
    MachineState,
    blum_cost,
)
from krt_toolkit.basesys.outcomes import (  # noqa: F401
    AbnormalDivergence,
    Halted,
    OutOfBudget,
    RunOutcome,
    same_behaviour,
)
from krt_toolkit.basesys.primitives import (  # noqa: F401
    Charged,
    Primitive,
    Subrun,
    total_primitive,
)
