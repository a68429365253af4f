# -*- coding: utf-8 -*-

"""Linear-time numeric codings shared by every other package."""

from krt_toolkit.numcode.display import (  # noqa: F401
    lift_digit_limit,
    short_number,
    short_text,
)
from krt_toolkit.numcode.pairing import (  # noqa: F401
    bitlen,
    pair,
    tuple_decode,
    tuple_encode,
    unpair,
)
from krt_toolkit.numcode.prefix import decode_delta, encode_delta  # noqa: F401
from krt_toolkit.numcode.primes import nth_prime  # noqa: F401
from krt_toolkit.numcode.sets import (  # noqa: F401
    SetCode,
    set_decode,
    set_encode,
)
