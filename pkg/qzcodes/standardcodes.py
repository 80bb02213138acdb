from __future__ import annotations

from enum import Enum
from typing import Optional

from qzcodes.config import RunConfig
from qzcodes.zncodes import LinearCodeZn


def _rows(*words: str) -> tuple:
    return tuple(tuple(int(symbol) for symbol in word) for word in words)


class StandardCode(Enum):
    """Classical codes over Z_n that the punctured construction is usually
    fed with. Every entry has a last coordinate that takes all values."""

    def __new__(cls, tag: int, identifier: str, modulus: int, generators: tuple, description: str):
        obj = object.__new__(cls)
        obj._value_ = tag
        obj.identifier = identifier
        obj.modulus = modulus
        obj.generators = generators
        obj.description = description
        return obj

    @staticmethod
    def from_identifier(identifier: str) -> StandardCode:
        for val in StandardCode:
            if identifier.lower() == val.identifier.lower() or identifier.lower() == val.name.lower():
                return val
        raise ValueError(f'{identifier} is not an identifier of a StandardCode')

    @property
    def length(self) -> int:
        return len(self.generators[0])

    def code(self, config: Optional[RunConfig] = None) -> LinearCodeZn:
        return LinearCodeZn(self.modulus, self.length, self.generators, config=config)

    HAMMING7 = (0x01, 'hamming7', 2, _rows('1110000', '1001100', '0101010', '1101001'),
                'binary Hamming [7,4,3]')
    HAMMING8 = (0x02, 'hamming8', 2, _rows('11100001', '10011001', '01010101', '11010010'),
                'extended binary Hamming [8,4,4], self-dual; punctures to the 7-qubit code')
    EVEN4 = (0x03, 'even4', 2, _rows('1100', '0110', '0011'),
             'binary even weight [4,3,2]; its dual is the repetition code')
    TETRACODE = (0x10, 'tetracode', 3, _rows('1110', '0121'),
                 'ternary tetracode [4,2,3], self-dual')
    GOLAY12 = (0x11, 'golay12', 3, _rows('100000011111', '010000101221', '001000110122',
                                         '000100121012', '000010122101', '000001112210'),
               'extended ternary Golay [12,6,6], self-dual')
