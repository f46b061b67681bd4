"""
Multi-rate padding and the sponge construction over Keccak-p.

``sponge`` is the one-shot, bit-exact form. ``SpongeHasher`` absorbs bytes
incrementally and only forms the padded final block when output is
requested, so inputs larger than memory can be streamed through it.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from .bits import BitString
from .exceptions import InvalidParameterError
from .permutation import (
    KECCAK_F1600,
    PermutationParams,
    RhoOffsets,
    RoundConstantTable,
    permute_lanes,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpongeParams:
    """Rate and capacity over a Keccak-p permutation, r + c = b."""

    r: int
    c: int
    permutation: PermutationParams = KECCAK_F1600

    def __post_init__(self):
        if self.r + self.c != self.permutation.b:
            raise InvalidParameterError(
                f"Rate {self.r} plus capacity {self.c} must equal the width {self.permutation.b}"
            )
        if not 0 < self.r < self.permutation.b:
            raise InvalidParameterError(f"Rate must lie strictly between 0 and {self.permutation.b}, got {self.r}")

    @classmethod
    def for_capacity(cls, c: int, permutation: PermutationParams = KECCAK_F1600) -> 'SpongeParams':
        return cls(permutation.b - c, c, permutation)

    @property
    def b(self) -> int:
        return self.permutation.b


@dataclass(frozen=True)
class SpongeInput:
    """Message bits N (suffix already applied) and the requested output length d."""

    n: BitString
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise InvalidParameterError(f"Output length must be at least one bit, got {self.d}")


def pad10star1(x: int, m: int) -> BitString:
    """1 || 0^j || 1 with j = (-m - 2) mod x, so that m + len(pad) is a multiple of x."""
    if x < 1:
        raise InvalidParameterError(f"Padding modulus must be positive, got {x}")
    if m < 0:
        raise InvalidParameterError(f"Message length must be non-negative, got {m}")
    j = (-m - 2) % x
    return BitString.from_int(1 | (1 << (j + 1)), j + 2)


def _absorb_block(lanes: List[int], block: int, permutation: PermutationParams):
    w, mask = permutation.w, permutation.mask
    for i in range(25):
        if not block:
            break
        lanes[i] ^= block & mask
        block >>= w


def _rate_bits(lanes: List[int], params: SpongeParams) -> int:
    w = params.permutation.w
    value = 0
    for i in range((params.r + w - 1) // w):
        value |= lanes[i] << (w * i)
    return value & ((1 << params.r) - 1)


def _squeeze(lanes: List[int], params: SpongeParams, d: int,
             offsets: Optional[RhoOffsets], rc_table: Optional[RoundConstantTable]) -> BitString:
    output = 0
    produced = 0
    while True:
        output |= _rate_bits(lanes, params) << produced
        produced += params.r
        if produced >= d:
            return BitString.from_int(output, d)
        lanes = permute_lanes(lanes, params.permutation, offsets, rc_table)


def sponge(params: SpongeParams, sponge_input: SpongeInput,
           offsets: Optional[RhoOffsets] = None,
           rc_table: Optional[RoundConstantTable] = None) -> BitString:
    """Sponge[Keccak-p, pad10*1, r](N, d): exactly d output bits."""
    r = params.r
    padded = sponge_input.n + pad10star1(r, sponge_input.n.length)
    value = padded.to_int()
    rate_mask = (1 << r) - 1

    lanes = [0] * 25
    for k in range(padded.length // r):
        _absorb_block(lanes, (value >> (k * r)) & rate_mask, params.permutation)
        lanes = permute_lanes(lanes, params.permutation, offsets, rc_table)
    return _squeeze(lanes, params, sponge_input.d, offsets, rc_table)


class SpongeHasher:
    """Incremental byte-oriented sponge.

    ``suffix`` holds the domain-separation bits appended after the message.
    A hasher is single-owner state; reading output does not finalize it, so
    more data may be absorbed afterwards.
    """

    def __init__(self, params: SpongeParams, suffix: Optional[BitString] = None,
                 offsets: Optional[RhoOffsets] = None,
                 rc_table: Optional[RoundConstantTable] = None):
        if params.r % 8:
            raise InvalidParameterError(f"Byte-oriented hashing needs a rate divisible by 8, got {params.r}")
        self.params = params
        self.suffix = suffix if suffix is not None else BitString.zeros(0)
        self._offsets = offsets
        self._rc_table = rc_table
        self._rate_bytes = params.r // 8
        self._lanes = [0] * 25
        self._buffer = bytearray()

    def _permute(self, lanes: List[int]) -> List[int]:
        return permute_lanes(lanes, self.params.permutation, self._offsets, self._rc_table)

    def update(self, data: bytes) -> None:
        buffer = self._buffer
        buffer.extend(data)
        rate_bytes = self._rate_bytes
        if len(buffer) < rate_bytes:
            return
        lanes = self._lanes
        full = len(buffer) - len(buffer) % rate_bytes
        for start in range(0, full, rate_bytes):
            block = int.from_bytes(buffer[start:start + rate_bytes], 'little')
            _absorb_block(lanes, block, self.params.permutation)
            lanes = self._permute(lanes)
        self._lanes = lanes
        del buffer[:full]

    def squeeze_bits(self, d: int) -> BitString:
        """The first d output bits for everything absorbed so far."""
        if d < 1:
            raise InvalidParameterError(f"Output length must be at least one bit, got {d}")
        r = self.params.r
        message_bits = 8 * len(self._buffer) + self.suffix.length
        tail = BitString.from_bytes(bytes(self._buffer)) + self.suffix + pad10star1(r, message_bits)
        value = tail.to_int()
        rate_mask = (1 << r) - 1

        lanes = list(self._lanes)
        for k in range(tail.length // r):
            _absorb_block(lanes, (value >> (k * r)) & rate_mask, self.params.permutation)
            lanes = self._permute(lanes)
        return _squeeze(lanes, self.params, d, self._offsets, self._rc_table)

    def squeeze(self, length: int) -> bytes:
        """The first ``length`` output bytes."""
        return self.squeeze_bits(8 * length).data

    def copy(self) -> 'SpongeHasher':
        clone = SpongeHasher.__new__(SpongeHasher)
        clone.params = self.params
        clone.suffix = self.suffix
        clone._offsets = self._offsets
        clone._rc_table = self._rc_table
        clone._rate_bytes = self._rate_bytes
        clone._lanes = list(self._lanes)
        clone._buffer = bytearray(self._buffer)
        return clone
