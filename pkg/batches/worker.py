"""
Work done for one dispatched range of a batch.

Kept free of Django settings access so process-pool children can import it
under any start method.
"""
from typing import List, Optional, Sequence, Tuple

from keccak.functions import digest_message, get_variant

from .tables import shared_tables


def hash_messages(variant_name: str, output_bits: Optional[int], messages: Sequence[bytes]) -> List[bytes]:
    variant = get_variant(variant_name)
    tables = shared_tables()
    return [digest_message(variant, message, output_bits, tables) for message in messages]


def hash_range(task: Tuple[int, int, str, Optional[int], Sequence[bytes]]) -> Tuple[int, int, List[bytes]]:
    start, end, variant_name, output_bits, messages = task
    return start, end, hash_messages(variant_name, output_bits, messages)


def warm_worker() -> None:
    """Pool initializer: build the tables before the first task arrives."""
    shared_tables()
