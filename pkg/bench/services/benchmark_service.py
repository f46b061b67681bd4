"""
Benchmark service: the sequential-vs-parallel throughput sweep.
This service acts as a facade over workload generation, the batch engine,
report rendering and run history.
"""
import logging
import statistics
from contextlib import ExitStack
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

from django.conf import settings

from batches.backends import Backend
from batches.engine import BatchEngine, BatchResult, EngineConfig, HashBatch
from keccak.functions import SHA3_256, sha3_digest

from ..exceptions import BackendMismatchError, WorkloadError
from ..models import BenchmarkRun
from ..reports import BenchmarkRecord, self_check, throughput
from ..workloads import WorkloadSpec, generate_workload, slice_workload

logger = logging.getLogger(__name__)

MIN_REPEATS = 3
# Upper bound on extra runs added by the timer-resolution guard
MAX_GUARD_REPEATS = 100000


@dataclass(frozen=True)
class Measurement:
    time_seconds: float
    repeats: int
    digests: Tuple[bytes, ...]


@dataclass
class BenchmarkOutcome:
    """Records of a sweep plus a fingerprint of the data it hashed."""
    records: List[BenchmarkRecord] = field(default_factory=list)
    fingerprint: str = ''


def fingerprint(digests: Sequence[bytes]) -> str:
    return sha3_digest(SHA3_256, b''.join(digests)).hex()


def measure_batch(engine: BatchEngine, batch: HashBatch, repeats: int = MIN_REPEATS,
                  min_elapsed: float = 0.001) -> Measurement:
    """One warm-up run, then the median of at least ``repeats`` timed runs.

    Runs are added until the timed runs together last ``min_elapsed``
    seconds, so the reported time is never zero.
    """
    if repeats < MIN_REPEATS:
        raise WorkloadError(f"At least {MIN_REPEATS} repeats are required, got {repeats}")
    warm: BatchResult = engine.hash(batch)
    timings = [engine.hash(batch).elapsed for _ in range(repeats)]

    if sum(timings) < min_elapsed:
        logger.warning(
            "%d messages hashed in %.6fs over %d runs, below the %.3fs timer guard; adding runs",
            len(batch), sum(timings), len(timings), min_elapsed,
        )
        while sum(timings) < min_elapsed and len(timings) < repeats + MAX_GUARD_REPEATS:
            timings.append(engine.hash(batch).elapsed)

    if sum(timings) <= 0:
        raise WorkloadError(f"Timer did not advance over {len(timings)} runs of {len(batch)} messages")
    median = statistics.median(timings)
    if median <= 0:
        median = sum(timings) / len(timings)
    return Measurement(median, len(timings), warm.digests)


def _record(spec: WorkloadSpec, total: int, batch: HashBatch, backend: Backend,
            measurement: Measurement) -> BenchmarkRecord:
    record = BenchmarkRecord(
        total_bytes=total,
        message_size=spec.message_size,
        message_count=len(batch),
        backend=backend,
        time_seconds=measurement.time_seconds,
        throughput_bps=throughput(total, measurement.time_seconds),
        repeats=measurement.repeats,
    )
    logger.info(
        "%d bytes (%d messages) on %s: %.6fs, %.2f B/s",
        record.total_bytes, record.message_count, backend.value,
        record.time_seconds, record.throughput_bps,
    )
    return record


def _check_agreement(total: int, digests: Dict[Backend, Tuple[bytes, ...]]) -> None:
    values = list(digests.values())
    if any(other != values[0] for other in values[1:]):
        raise BackendMismatchError(
            f"Backends {', '.join(b.value for b in digests)} disagree on the {total}-byte workload"
        )


def sweep(spec: WorkloadSpec, config: EngineConfig, backends: Optional[Sequence[Backend]] = None,
          repeats: int = MIN_REPEATS, min_elapsed: float = 0.001,
          workloads: Optional[Sequence[Tuple[int, HashBatch]]] = None) -> BenchmarkOutcome:
    """Measure every (total size, batch) workload on every backend.

    Each backend's engine stays open for the whole sweep. Records come out
    ordered by workload, then by backend. The fingerprint covers the
    digests of the smallest workload.
    """
    backends = [Backend(b) for b in (backends or [config.backend])]
    if workloads is None:
        workloads = [(total, generate_workload(spec, total)) for total in spec.sizes]

    outcome = BenchmarkOutcome()
    smallest = None
    with ExitStack() as stack:
        engines = {
            backend: stack.enter_context(BatchEngine(replace(config, backend=backend)))
            for backend in backends
        }
        for total, batch in workloads:
            digests = {}
            for backend, engine in engines.items():
                measurement = measure_batch(engine, batch, repeats, min_elapsed)
                digests[backend] = measurement.digests
                outcome.records.append(_record(spec, total, batch, backend, measurement))
            _check_agreement(total, digests)
            if smallest is None or total < smallest:
                smallest = total
                outcome.fingerprint = fingerprint(next(iter(digests.values())))
    return outcome


def run_benchmark(spec: WorkloadSpec, config: EngineConfig, backends: Optional[Sequence[Backend]] = None,
                  repeats: int = MIN_REPEATS, min_elapsed: float = 0.001) -> List[BenchmarkRecord]:
    """One BenchmarkRecord per (total size, backend)."""
    return sweep(spec, config, backends, repeats, min_elapsed).records


class BenchmarkService:
    """Service for running, saving and listing benchmark sweeps."""

    def __init__(self, config: Optional[EngineConfig] = None, repeats: Optional[int] = None,
                 min_elapsed: Optional[float] = None):
        """Initialize the service.

        Args:
            config: Engine configuration. If None, built from settings.
            repeats: Timed runs per record. If None, uses BENCH_REPEATS.
            min_elapsed: Timer guard in seconds. If None, uses BENCH_MIN_ELAPSED.
        """
        self.config = config or EngineConfig.from_settings()
        self.repeats = repeats or getattr(settings, 'BENCH_REPEATS', MIN_REPEATS)
        self.min_elapsed = (
            min_elapsed if min_elapsed is not None else getattr(settings, 'BENCH_MIN_ELAPSED', 0.001)
        )

    def run(self, spec: WorkloadSpec, backends: Optional[Sequence[Backend]] = None) -> BenchmarkOutcome:
        """Sweep every size of the spec."""
        logger.info(
            "Benchmarking %s over %d sizes of %d-byte messages (seed %d)",
            spec.variant.name, len(spec.sizes), spec.message_size, spec.seed,
        )
        return sweep(spec, self.config, backends, self.repeats, self.min_elapsed)

    def run_input(self, data: bytes, spec: WorkloadSpec,
                  backends: Optional[Sequence[Backend]] = None) -> BenchmarkOutcome:
        """Benchmark one input divided into message_size slices."""
        batch = slice_workload(data, spec)
        logger.info("Benchmarking %d slices of %d bytes from input", len(batch), spec.message_size)
        return sweep(spec, self.config, backends, self.repeats, self.min_elapsed,
                     workloads=[(batch.total_bytes, batch)])

    def workers_for(self, backends: Sequence[Backend]) -> int:
        if Backend.PARALLEL in backends:
            return replace(self.config, backend=Backend.PARALLEL).resolved_workers()
        return 1

    def save(self, spec: WorkloadSpec, outcome: BenchmarkOutcome, label: str = '') -> BenchmarkRun:
        """Persist a sweep and its rows."""
        backends = sorted({record.backend for record in outcome.records}, key=lambda b: b.value)
        run = BenchmarkRun.record(
            spec,
            outcome.records,
            workers=self.workers_for(backends),
            chunk_size=self.config.chunk_size,
            repeats=self.repeats,
            label=label,
            fingerprint=outcome.fingerprint,
        )
        logger.info("Saved benchmark run %s with %d results", run.id, len(outcome.records))
        return run

    @staticmethod
    def history(limit: int = 10) -> List[BenchmarkRun]:
        """The most recent saved runs, newest first."""
        if limit < 1:
            raise WorkloadError(f"History limit must be at least 1, got {limit}")
        return list(BenchmarkRun.objects.prefetch_related('results')[:limit])

    @staticmethod
    def self_check():
        return self_check()
