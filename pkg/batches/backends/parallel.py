"""
Process-pool backend: one task per planned range, many ranges in flight.

Uses billiard, the multiprocessing fork maintained alongside Celery, because
a CPU-bound pure-Python permutation does not scale across threads.
"""
import logging
from typing import List, Optional, Sequence, Tuple

from billiard import Pool

from . import Backend, HashBackend
from ..exceptions import WorkerError
from ..worker import hash_range, warm_worker

logger = logging.getLogger(__name__)


class ParallelBackend(HashBackend):
    """Hashes ranges in a pool of worker processes."""

    name = Backend.PARALLEL

    def __init__(self, workers: Optional[int] = None, maxtasksperchild: Optional[int] = None):
        self.workers = workers
        self.maxtasksperchild = maxtasksperchild
        self._pool = None

    def open(self) -> None:
        if self._pool is None:
            self._pool = Pool(
                processes=self.workers,
                initializer=warm_worker,
                maxtasksperchild=self.maxtasksperchild,
            )
            logger.debug("Started worker pool with %s processes", self.workers or 'default')

    def close(self) -> None:
        if self._pool is not None:
            self._pool.close()
            self._pool.join()
            self._pool = None

    def terminate(self) -> None:
        if self._pool is not None:
            self._pool.terminate()
            self._pool.join()
            self._pool = None

    def __exit__(self, exc_type, exc, tb):
        if exc_type is None:
            self.close()
        else:
            self.terminate()
        return False

    def run(
        self,
        variant_name: str,
        output_bits: Optional[int],
        messages: Sequence[bytes],
        plan: Sequence[Tuple[int, int]],
        out: List[Optional[bytes]],
    ) -> None:
        if not plan:
            return
        self.open()
        tasks = [(start, end, variant_name, output_bits, messages[start:end]) for start, end in plan]
        try:
            for start, end, digests in self._pool.imap_unordered(hash_range, tasks):
                out[start:end] = digests
        except Exception as e:
            logger.error(f"Worker failed while hashing a batch: {str(e)}", exc_info=True)
            raise WorkerError(f"Parallel hashing failed: {str(e)}") from e
