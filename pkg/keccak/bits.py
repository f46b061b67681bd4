"""
Bit strings with an exact bit length.

Bit i of a string lives in byte i // 8 at bit position i % 8, least significant
bit first. Read as one little-endian integer, bit i of the string is simply
bit i of the integer, which is how the permutation and the sponge consume it.
"""
from dataclasses import dataclass
from typing import Iterable, List

from .exceptions import InvalidParameterError


@dataclass(frozen=True)
class BitString:
    """An immutable byte sequence plus an exact bit length."""

    data: bytes
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise InvalidParameterError(f"Bit length must be non-negative, got {self.length}")
        if len(self.data) != (self.length + 7) // 8:
            raise InvalidParameterError(
                f"{len(self.data)} bytes cannot hold exactly {self.length} bits"
            )
        spare = len(self.data) * 8 - self.length
        if spare and self.data[-1] >> (8 - spare):
            raise InvalidParameterError("Bits beyond the declared length must be zero")

    @classmethod
    def from_bytes(cls, data: bytes, length: int = None) -> 'BitString':
        """Wrap whole bytes, or their first ``length`` bits when given."""
        if length is None:
            return cls(bytes(data), len(data) * 8)
        return cls.from_int(int.from_bytes(data, 'little'), length)

    @classmethod
    def from_int(cls, value: int, length: int) -> 'BitString':
        """Build from an integer whose bit i is string bit i; higher bits are dropped."""
        if length < 0:
            raise InvalidParameterError(f"Bit length must be non-negative, got {length}")
        value &= (1 << length) - 1
        return cls(value.to_bytes((length + 7) // 8, 'little'), length)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> 'BitString':
        """Build from a sequence of 0/1 values, first element is bit 0."""
        value = 0
        length = 0
        for bit in bits:
            if bit not in (0, 1):
                raise InvalidParameterError(f"Bit values must be 0 or 1, got {bit!r}")
            value |= bit << length
            length += 1
        return cls.from_int(value, length)

    @classmethod
    def from_text(cls, text: str) -> 'BitString':
        """Parse a written bit pattern such as ``"01"`` or ``"1111"``, first character is bit 0."""
        return cls.from_bits(int(char) for char in text)

    @classmethod
    def zeros(cls, length: int) -> 'BitString':
        return cls.from_int(0, length)

    def to_int(self) -> int:
        return int.from_bytes(self.data, 'little')

    def bits(self) -> List[int]:
        value = self.to_int()
        return [(value >> i) & 1 for i in range(self.length)]

    def __len__(self):
        return self.length

    def __getitem__(self, index: int) -> int:
        if not -self.length <= index < self.length:
            raise IndexError('bit index out of range')
        return (self.to_int() >> (index % self.length)) & 1

    def __add__(self, other: 'BitString') -> 'BitString':
        """Concatenation ``self || other``."""
        if not isinstance(other, BitString):
            return NotImplemented
        return BitString.from_int(self.to_int() | (other.to_int() << self.length), self.length + other.length)

    def __xor__(self, other: 'BitString') -> 'BitString':
        if not isinstance(other, BitString):
            return NotImplemented
        if other.length != self.length:
            raise InvalidParameterError('XOR needs bit strings of equal length')
        return BitString.from_int(self.to_int() ^ other.to_int(), self.length)

    def prefix(self, length: int) -> 'BitString':
        """The first ``length`` bits."""
        if not 0 <= length <= self.length:
            raise InvalidParameterError(f"Cannot take {length} bits of a {self.length}-bit string")
        return BitString.from_int(self.to_int(), length)

    def popcount(self) -> int:
        return bin(self.to_int()).count('1')

    def hex(self) -> str:
        return self.data.hex()

    def __str__(self):
        return ''.join(str(bit) for bit in self.bits())
