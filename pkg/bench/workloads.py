"""
Benchmark workloads: many equal-length pseudorandom messages from a seed.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from batches.engine import HashBatch
from keccak.functions import SHA3_256, FunctionVariant, get_variant
from keccak.exceptions import UnknownVariantError

from .exceptions import WorkloadError

logger = logging.getLogger(__name__)

# Total-byte sizes of the published CPU/GPU comparison, smallest first
DEFAULT_SIZES = (1202, 4652, 9302, 18602, 37202, 74402, 148802, 297602, 595202, 1190402)
DEFAULT_MESSAGE_SIZE = 10
DEFAULT_XOF_BITS = 256

MASK64 = (1 << 64) - 1


class SplitMix64:
    """Seeded 64-bit generator; the same seed always yields the same stream."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randbytes(self, n: int) -> bytes:
        words = (n + 7) // 8
        return b''.join(self.next().to_bytes(8, 'little') for _ in range(words))[:n]


@dataclass(frozen=True)
class WorkloadSpec:
    """What to hash: message size, the total-byte targets to sweep, variant and seed."""

    message_size: int = DEFAULT_MESSAGE_SIZE
    sizes: Tuple[int, ...] = DEFAULT_SIZES
    variant: FunctionVariant = SHA3_256
    seed: int = 2019
    output_bits: Optional[int] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, 'variant', get_variant(self.variant))
        except UnknownVariantError as e:
            raise WorkloadError(str(e))
        object.__setattr__(self, 'sizes', tuple(self.sizes))
        if self.message_size < 1:
            raise WorkloadError(f"Message size must be at least 1 byte, got {self.message_size}")
        for total in self.sizes:
            if total < self.message_size:
                raise WorkloadError(f"Total size {total} is smaller than one {self.message_size}-byte message")
        if self.output_bits is not None and self.output_bits < 1:
            raise WorkloadError(f"Output length must be at least 1 bit, got {self.output_bits}")
        if not self.variant.is_xof and self.output_bits not in (None, self.variant.digest_bits):
            raise WorkloadError(
                f"{self.variant.name} has a fixed {self.variant.digest_bits}-bit digest, got {self.output_bits}"
            )

    @property
    def effective_output_bits(self) -> Optional[int]:
        if not self.variant.is_xof:
            return None
        return self.output_bits or DEFAULT_XOF_BITS

    def message_count(self, total_bytes: int) -> int:
        return total_bytes // self.message_size


def generate_workload(spec: WorkloadSpec, total_bytes: Optional[int] = None) -> HashBatch:
    """floor(total / message_size) messages drawn from SplitMix64(seed).

    ``total_bytes`` defaults to the first size of the spec. Smaller totals
    under the same seed are prefixes of larger ones.
    """
    if total_bytes is None:
        if not spec.sizes:
            raise WorkloadError('Workload has no sizes')
        total_bytes = spec.sizes[0]
    if total_bytes < spec.message_size:
        raise WorkloadError(f"Total size {total_bytes} is smaller than one {spec.message_size}-byte message")
    generator = SplitMix64(spec.seed)
    count = spec.message_count(total_bytes)
    messages = tuple(generator.randbytes(spec.message_size) for _ in range(count))
    logger.debug("Generated %d messages of %d bytes (seed %d)", count, spec.message_size, spec.seed)
    return HashBatch(spec.variant, messages, spec.effective_output_bits)


def slice_workload(data: bytes, spec: WorkloadSpec) -> HashBatch:
    """One input divided into message_size slices; a short trailing slice is dropped."""
    count = len(data) // spec.message_size
    if count == 0:
        raise WorkloadError(f"Input of {len(data)} bytes holds no complete {spec.message_size}-byte message")
    size = spec.message_size
    messages = tuple(data[i * size:(i + 1) * size] for i in range(count))
    return HashBatch(spec.variant, messages, spec.effective_output_bits)
