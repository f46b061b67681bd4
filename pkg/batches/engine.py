"""
Batch-mode hashing: many independent messages, one logical worker per message.

Messages are split into contiguous ranges which a backend hashes; digests are
written into a pre-sized slot per message, so output order equals input
order by construction.
"""
import logging
import math
import os
import time
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from django.conf import settings

from keccak.functions import FunctionVariant, get_variant

from .backends import Backend, HashBackend, get_hash_backend
from .exceptions import InvalidEngineConfigError, InvalidOutputLengthError, MissingOutputLengthError
from .tables import SharedTables, shared_tables

logger = logging.getLogger(__name__)

__all__ = [
    'BatchEngine', 'BatchResult', 'EngineConfig', 'HashBatch', 'SharedTables',
    'hash_batch', 'plan_partition', 'shared_tables',
]


def _auto_or_int(value, name: str) -> Optional[int]:
    if value is None or (isinstance(value, str) and value.strip().lower() == 'auto'):
        return None
    try:
        return int(value)
    except (TypeError, ValueError):
        raise InvalidEngineConfigError(f"{name} must be a positive integer or 'auto', got {value!r}")


@dataclass(frozen=True)
class EngineConfig:
    """How a batch is executed.

    ``worker_count`` None means one worker per CPU; ``chunk_size`` None means
    ceil(count / (8 x workers)) messages per task.
    """

    backend: Backend = Backend.SEQUENTIAL
    worker_count: Optional[int] = None
    chunk_size: Optional[int] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, 'backend', Backend(self.backend))
        except ValueError:
            raise InvalidEngineConfigError(f"Unknown backend: {self.backend!r}")
        for name in ('worker_count', 'chunk_size'):
            value = getattr(self, name)
            if value is not None and (not isinstance(value, int) or value < 1):
                raise InvalidEngineConfigError(f"{name} must be at least 1, got {value!r}")

    @classmethod
    def from_settings(cls, **overrides) -> 'EngineConfig':
        """Defaults from HASH_BACKEND / BATCH_WORKERS / BATCH_CHUNK_SIZE, then overrides."""
        values = {
            'backend': getattr(settings, 'HASH_BACKEND', Backend.PARALLEL.value),
            'worker_count': _auto_or_int(getattr(settings, 'BATCH_WORKERS', 'auto'), 'BATCH_WORKERS'),
            'chunk_size': _auto_or_int(getattr(settings, 'BATCH_CHUNK_SIZE', 'auto'), 'BATCH_CHUNK_SIZE'),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def resolved_workers(self) -> int:
        if self.backend == Backend.SEQUENTIAL:
            return 1
        return self.worker_count or os.cpu_count() or 1

    def resolved_chunk_size(self, message_count: int) -> int:
        if self.chunk_size is not None:
            return self.chunk_size
        return max(1, math.ceil(message_count / (8 * self.resolved_workers())))


@dataclass(frozen=True)
class HashBatch:
    """Ordered messages plus the function applied to each of them."""

    variant: FunctionVariant
    messages: Tuple[bytes, ...] = ()
    output_bits: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'variant', get_variant(self.variant))
        object.__setattr__(self, 'messages', tuple(bytes(message) for message in self.messages))

    def __len__(self):
        return len(self.messages)

    @property
    def total_bytes(self) -> int:
        return sum(len(message) for message in self.messages)

    def validate(self) -> None:
        if self.variant.is_xof and self.output_bits is None:
            raise MissingOutputLengthError(f"{self.variant.name} batches need output_bits")
        if self.output_bits is not None and self.output_bits < 1:
            raise InvalidOutputLengthError(f"output_bits must be at least 1, got {self.output_bits}")
        if not self.variant.is_xof and self.output_bits not in (None, self.variant.digest_bits):
            raise InvalidOutputLengthError(
                f"{self.variant.name} digests are {self.variant.digest_bits} bits, got output_bits={self.output_bits}"
            )


@dataclass(frozen=True)
class BatchResult:
    """Digests in input order and the wall time of the hashing phase alone."""

    digests: Tuple[bytes, ...] = field(default_factory=tuple)
    elapsed: float = 0.0

    def __len__(self):
        return len(self.digests)


def plan_partition(message_count: int, config: EngineConfig) -> List[Tuple[int, int]]:
    """Contiguous, disjoint ranges of at most chunk_size messages covering [0, count)."""
    if message_count < 0:
        raise InvalidEngineConfigError(f"Message count must be non-negative, got {message_count}")
    chunk = config.resolved_chunk_size(message_count)
    return [(start, min(start + chunk, message_count)) for start in range(0, message_count, chunk)]


class BatchEngine:
    """Holds a backend open across many batches.

    Pool start-up and shutdown happen on enter/exit, outside the timed
    hashing phase.
    """

    def __init__(self, config: Optional[EngineConfig] = None, backend: Optional[HashBackend] = None):
        self.config = config or EngineConfig()
        self.backend = backend or get_hash_backend(
            self.config.backend, workers=self.config.resolved_workers()
        )

    def __enter__(self) -> 'BatchEngine':
        self.backend.__enter__()
        return self

    def __exit__(self, exc_type, exc, tb):
        return self.backend.__exit__(exc_type, exc, tb)

    def hash(self, batch: HashBatch) -> BatchResult:
        batch.validate()
        count = len(batch.messages)
        plan = plan_partition(count, self.config)
        out: List[Optional[bytes]] = [None] * count
        shared_tables()
        logger.info(
            "Hashing %d messages with %s on %s backend (%d workers, %d tasks)",
            count, batch.variant.name, self.config.backend.value,
            self.config.resolved_workers(), len(plan),
        )
        started = time.perf_counter()
        self.backend.run(batch.variant.cli_name, batch.output_bits, batch.messages, plan, out)
        elapsed = time.perf_counter() - started
        return BatchResult(tuple(out), elapsed)


def hash_batch(batch: HashBatch, config: Optional[EngineConfig] = None) -> BatchResult:
    """Hash a batch with a backend opened for this call only."""
    batch.validate()
    with BatchEngine(config) as engine:
        return engine.hash(batch)

