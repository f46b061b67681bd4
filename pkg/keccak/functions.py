"""
The six FIPS 202 functions as named sponge configurations.

Byte-level contract of the domain-separation suffixes: message bits are read
least significant bit first, so the SHA-3 suffix "01" followed by the first
padding bit merges into the byte 0x06 after a byte-aligned message, and the
SHAKE suffix "1111" followed by the first padding bit merges into 0x1F. The
last padding bit sets 0x80 in the final byte of the block (0x86 / 0x9F when
both land in the same byte).
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from .bits import BitString
from .exceptions import InvalidParameterError, UnknownVariantError
from .permutation import KECCAK_F1600, RhoOffsets, RoundConstantTable
from .sponge import SpongeHasher, SpongeInput, SpongeParams, sponge

logger = logging.getLogger(__name__)

HASH_SUFFIX = BitString.from_text('01')
XOF_SUFFIX = BitString.from_text('1111')


@dataclass(frozen=True)
class FunctionVariant:
    """One of SHA3-224/256/384/512 or SHAKE-128/256."""

    name: str
    cli_name: str
    capacity: int
    suffix: BitString
    digest_bits: Optional[int] = None

    @property
    def is_xof(self) -> bool:
        return self.digest_bits is None

    @property
    def rate(self) -> int:
        return KECCAK_F1600.b - self.capacity

    @property
    def sponge_params(self) -> SpongeParams:
        return SpongeParams.for_capacity(self.capacity)

    @property
    def digest_size(self) -> int:
        """Digest size in bytes, 0 for XOFs."""
        return (self.digest_bits or 0) // 8

    def __str__(self):
        return self.name


SHA3_224 = FunctionVariant('SHA3-224', 'sha3-224', 448, HASH_SUFFIX, 224)
SHA3_256 = FunctionVariant('SHA3-256', 'sha3-256', 512, HASH_SUFFIX, 256)
SHA3_384 = FunctionVariant('SHA3-384', 'sha3-384', 768, HASH_SUFFIX, 384)
SHA3_512 = FunctionVariant('SHA3-512', 'sha3-512', 1024, HASH_SUFFIX, 512)
SHAKE_128 = FunctionVariant('SHAKE-128', 'shake128', 256, XOF_SUFFIX)
SHAKE_256 = FunctionVariant('SHAKE-256', 'shake256', 512, XOF_SUFFIX)

VARIANTS = (SHA3_224, SHA3_256, SHA3_384, SHA3_512, SHAKE_128, SHAKE_256)


def _normalize(name: str) -> str:
    return name.strip().lower().replace('-', '').replace('_', '')


_VARIANT_LOOKUP = {_normalize(variant.name): variant for variant in VARIANTS}


def get_variant(name) -> FunctionVariant:
    """Resolve ``sha3-256``, ``SHA3_256``, ``shake128``, ``SHAKE-128`` and the like."""
    if isinstance(name, FunctionVariant):
        return name
    try:
        return _VARIANT_LOOKUP[_normalize(name)]
    except (KeyError, AttributeError):
        raise UnknownVariantError(f"Unknown hash function: {name!r}")


def keccak_c(c: int, n: BitString, d: int) -> BitString:
    """Keccak[c](N, d) = Sponge[Keccak-p[1600, 24], pad10*1, 1600 - c](N, d)."""
    if not 0 < c < KECCAK_F1600.b:
        raise InvalidParameterError(f"Capacity must lie strictly between 0 and 1600, got {c}")
    return sponge(SpongeParams.for_capacity(c), SpongeInput(n, d))


class Hasher:
    """hashlib-style object for one variant.

    Hash variants return their fixed digest; XOFs take the output length in
    bytes on every ``digest`` call.
    """

    def __init__(self, variant: FunctionVariant, data: bytes = b'',
                 tables: Optional[Tuple[RoundConstantTable, RhoOffsets]] = None):
        self.variant = variant
        rc_table, offsets = tables or (None, None)
        self._sponge = SpongeHasher(variant.sponge_params, variant.suffix, offsets, rc_table)
        if data:
            self.update(data)

    @property
    def name(self) -> str:
        return self.variant.cli_name

    @property
    def digest_size(self) -> int:
        return self.variant.digest_size

    @property
    def block_size(self) -> int:
        return self.variant.rate // 8

    def update(self, data: bytes) -> None:
        self._sponge.update(data)

    def digest_bits(self, d: Optional[int] = None) -> BitString:
        if self.variant.is_xof:
            if d is None:
                raise InvalidParameterError(f"{self.variant.name} needs an output length")
            if d < 1:
                raise InvalidParameterError(f"Output length must be at least one bit, got {d}")
        elif d is not None and d != self.variant.digest_bits:
            raise InvalidParameterError(f"{self.variant.name} has a fixed {self.variant.digest_bits}-bit digest")
        return self._sponge.squeeze_bits(d if d is not None else self.variant.digest_bits)

    def digest(self, length: Optional[int] = None) -> bytes:
        return self.digest_bits(None if length is None else 8 * length).data

    def hexdigest(self, length: Optional[int] = None) -> str:
        return self.digest(length).hex()

    def copy(self) -> 'Hasher':
        clone = Hasher.__new__(Hasher)
        clone.variant = self.variant
        clone._sponge = self._sponge.copy()
        return clone


def new(name, data: bytes = b'') -> Hasher:
    return Hasher(get_variant(name), data)


def sha3_224(data: bytes = b'') -> Hasher:
    return Hasher(SHA3_224, data)


def sha3_256(data: bytes = b'') -> Hasher:
    return Hasher(SHA3_256, data)


def sha3_384(data: bytes = b'') -> Hasher:
    return Hasher(SHA3_384, data)


def sha3_512(data: bytes = b'') -> Hasher:
    return Hasher(SHA3_512, data)


def shake_128(data: bytes = b'') -> Hasher:
    return Hasher(SHAKE_128, data)


def shake_256(data: bytes = b'') -> Hasher:
    return Hasher(SHAKE_256, data)


def sha3_digest(variant: FunctionVariant, m: bytes) -> bytes:
    """Keccak[c](M || 01, digest_bits) as bytes."""
    if variant.is_xof:
        raise InvalidParameterError(f"{variant.name} is an XOF; use shake()")
    return Hasher(variant, m).digest()


def shake(variant: FunctionVariant, m: bytes, d: int) -> bytes:
    """Keccak[c](M || 1111, d) as bytes; a partial final byte keeps its low-order bits."""
    if not variant.is_xof:
        raise InvalidParameterError(f"{variant.name} is a fixed-length hash; use sha3_digest()")
    if d < 1:
        raise InvalidParameterError(f"Output length must be at least one bit, got {d}")
    return Hasher(variant, m).digest_bits(d).data


def digest_message(variant: FunctionVariant, m: bytes, output_bits: Optional[int] = None,
                   tables: Optional[Tuple[RoundConstantTable, RhoOffsets]] = None) -> bytes:
    """Digest of one message under any variant; XOFs need ``output_bits``."""
    return Hasher(variant, m, tables).digest_bits(output_bits if variant.is_xof else None).data
