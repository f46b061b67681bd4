"""
Process-wide round-constant and rotation tables for Keccak-f[1600].

Built at most once per process and never mutated, so every worker thread
and every message in a batch reads the same table.
"""
import logging
import threading
from typing import NamedTuple, Optional

from keccak.permutation import (
    KECCAK_F1600,
    RhoOffsets,
    RoundConstantTable,
    compute_rho_offsets,
    generate_round_constants,
)

logger = logging.getLogger(__name__)


class SharedTables(NamedTuple):
    rc_table: RoundConstantTable
    offsets: RhoOffsets


_lock = threading.Lock()
_tables: Optional[SharedTables] = None


def shared_tables() -> SharedTables:
    global _tables
    if _tables is None:
        with _lock:
            if _tables is None:
                _tables = SharedTables(
                    generate_round_constants(KECCAK_F1600),
                    compute_rho_offsets(KECCAK_F1600.w),
                )
                logger.debug("Built shared Keccak-f[1600] tables")
    return _tables
