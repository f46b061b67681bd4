"""
In-process backend: ranges are hashed one after another in the caller's thread.
"""
import logging
from typing import List, Optional, Sequence, Tuple

from . import Backend, HashBackend
from ..worker import hash_messages

logger = logging.getLogger(__name__)


class SequentialBackend(HashBackend):
    """Reference backend; its output is the oracle for every other backend."""

    name = Backend.SEQUENTIAL

    def __init__(self, workers: Optional[int] = None, **kwargs):
        self.workers = 1

    def run(
        self,
        variant_name: str,
        output_bits: Optional[int],
        messages: Sequence[bytes],
        plan: Sequence[Tuple[int, int]],
        out: List[Optional[bytes]],
    ) -> None:
        for start, end in plan:
            out[start:end] = hash_messages(variant_name, output_bits, messages[start:end])
