# -*- coding: utf-8 -*-

"""Pairing, tuples, bit lengths and set codes."""

from typing import List

from typing_extensions import Final, final

from krt_toolkit.checks.base import (
    BaseSuite,
    Verdict,
    detail,
    first_failure,
)
from krt_toolkit.numcode import (
    bitlen,
    pair,
    set_decode,
    set_encode,
    tuple_decode,
    tuple_encode,
    unpair,
)
from krt_toolkit.options import defaults

#: Widest random numbers, wide enough for the table based path.
_BITS: Final = 160


@final
class PairingSuite(BaseSuite):
    """Checks the numeric codings everything else is built on."""

    name = 'pairing'

    def check_worked_example(self) -> Verdict:
        """Interleaving ``1111`` with ``0010`` gives ``10101110``."""
        paired = pair(15, 2)
        return paired == 0b10101110, detail('pair(15, 2) = {0:b}', paired)

    def check_bijection(self) -> Verdict:
        """Both round trips on random pairs and numbers."""
        outcomes: List[Verdict] = []
        count = self.samples(defaults.PAIRING_SAMPLES)
        for _ in range(count):
            first = self._number()
            second = self._number()
            number = self._number()
            outcomes.append((
                unpair(pair(first, second)) == (first, second) and
                pair(*unpair(number)) == number,
                detail(
                    'round trip fails on ({0}, {1}) or {2}',
                    first, second, number,
                ),
            ))
        return first_failure(outcomes, detail('{0} samples', count))

    def check_tuple_properties(self) -> Verdict:
        """Odd codes end odd, codes grow in every slot, bound the slots."""
        outcomes: List[Verdict] = []
        count = self.samples(defaults.PAIRING_SAMPLES)
        for _ in range(count):
            arity = self.random.randint(2, 5)
            elements = [self._number() for _ in range(arity)]
            encoded = tuple_encode(elements, arity)
            slot = self.random.randrange(arity)
            bigger = list(elements)
            bigger[slot] += 1
            outcomes.append((
                tuple_decode(encoded, arity) == elements and
                (encoded % 2 == 0 or elements[-1] % 2 == 1) and
                tuple_encode(bigger, arity) > encoded and
                max(elements) <= encoded,
                detail('tuple properties fail on {0}', elements),
            ))
        return first_failure(outcomes, detail('{0} samples', count))

    def check_bit_length(self) -> Verdict:
        """``bitlen`` counts binary digits, ``bitlen(0) = 1``."""
        count = self.samples(defaults.PAIRING_SAMPLES)
        numbers = [0] + [self._number() for _ in range(count)]
        return first_failure(
            [
                (
                    bitlen(number) == len(format(number, 'b')),
                    detail('bitlen of {0}', number),
                )
                for number in numbers
            ],
            detail('{0} samples', len(numbers)),
        )

    def check_set_codes(self) -> Verdict:
        """Decoding is total and encoding inverts it."""
        count = self.samples(defaults.PAIRING_SAMPLES)
        outcomes = []
        for _ in range(count):
            code = self._number()
            outcomes.append((
                set_encode(set_decode(code)).code == code,
                detail('set code {0} does not round trip', code),
            ))
        return first_failure(outcomes, detail('{0} samples', count))

    def _number(self) -> int:
        return self.random.getrandbits(self.random.randint(1, _BITS))
