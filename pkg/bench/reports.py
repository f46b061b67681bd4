"""
Benchmark records and their console / CSV renderings.
"""
import io
import logging
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, NamedTuple, Sequence

import pandas as pd

from batches.backends import Backend

from .exceptions import ReportFormatError

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    'total_bytes', 'message_size', 'message_count', 'backend',
    'time_seconds', 'throughput_bps', 'repeats',
)
REPORT_FORMATS = ('console', 'csv')


@dataclass(frozen=True)
class BenchmarkRecord:
    """One row of a benchmark report."""

    total_bytes: int
    message_size: int
    message_count: int
    backend: Backend
    time_seconds: float
    throughput_bps: float
    repeats: int

    def __post_init__(self):
        object.__setattr__(self, 'backend', Backend(self.backend))

    def as_row(self) -> Dict:
        row = asdict(self)
        row['backend'] = self.backend.value
        return row


def throughput(total_bytes: int, seconds: float) -> float:
    """Bytes per second."""
    if seconds <= 0:
        raise ReportFormatError(f"Cannot compute throughput over {seconds} seconds")
    return total_bytes / seconds


class ReportedRow(NamedTuple):
    total_bytes: int
    cpu_seconds: float
    gpu_seconds: float
    cpu_throughput: float
    gpu_throughput: float


# Published sequential (CPU) vs. batch-parallel (GPU) measurements
REPORTED_ROWS = (
    ReportedRow(1202, 0.002656, 0.000431, 452560.24, 2788863.11),
    ReportedRow(4652, 0.008600, 0.000330, 540930.23, 14096969.69),
    ReportedRow(9302, 0.016400, 0.000330, 567195.12, 28187878.78),
    ReportedRow(18602, 0.032475, 0.000346, 572809.85, 53763005.78),
    ReportedRow(37202, 0.065230, 0.000373, 570320.40, 99737265.42),
    ReportedRow(74402, 0.129495, 0.000382, 574555.00, 194769633.41),
    ReportedRow(148802, 0.258204, 0.000437, 576296.26, 340508009.15),
    ReportedRow(297602, 0.516079, 0.000557, 576659.77, 534294434.47),
    ReportedRow(595202, 1.036339, 0.000755, 574331.37, 788347019.87),
    ReportedRow(1190402, 2.060367, 0.001204, 577762.12, 988705980.06),
)


class SelfCheckRow(NamedTuple):
    reported: ReportedRow
    cpu_throughput: float
    gpu_throughput: float
    ok: bool


def self_check(rows: Sequence[ReportedRow] = REPORTED_ROWS, tolerance: float = 1e-4) -> List[SelfCheckRow]:
    """Recompute the throughput columns from the time columns."""
    checked = []
    for row in rows:
        cpu = throughput(row.total_bytes, row.cpu_seconds)
        gpu = throughput(row.total_bytes, row.gpu_seconds)
        ok = (abs(cpu - row.cpu_throughput) <= tolerance * row.cpu_throughput
              and abs(gpu - row.gpu_throughput) <= tolerance * row.gpu_throughput)
        checked.append(SelfCheckRow(row, cpu, gpu, ok))
    return checked


def emit_self_check(checked: Sequence[SelfCheckRow]) -> str:
    """Reported next to recomputed throughput, one line per reported row."""
    frame = pd.DataFrame([
        {
            'total_bytes': row.reported.total_bytes,
            'seq_reported': row.reported.cpu_throughput,
            'seq_recomputed': row.cpu_throughput,
            'par_reported': row.reported.gpu_throughput,
            'par_recomputed': row.gpu_throughput,
            'status': 'ok' if row.ok else 'MISMATCH',
        }
        for row in checked
    ])
    return frame.to_string(index=False, float_format='{:.2f}'.format) + '\n'


def speedups(records: Iterable[BenchmarkRecord]) -> Dict[int, float]:
    """t_sequential / t_parallel for every total size measured on both backends."""
    times: Dict[int, Dict[Backend, float]] = {}
    for record in records:
        times.setdefault(record.total_bytes, {})[record.backend] = record.time_seconds
    return {
        total: by_backend[Backend.SEQUENTIAL] / by_backend[Backend.PARALLEL]
        for total, by_backend in times.items()
        if Backend.SEQUENTIAL in by_backend and Backend.PARALLEL in by_backend
        and by_backend[Backend.PARALLEL] > 0
    }


def records_frame(records: Sequence[BenchmarkRecord]) -> pd.DataFrame:
    return pd.DataFrame([record.as_row() for record in records], columns=list(CSV_COLUMNS))


def _console(records: Sequence[BenchmarkRecord]) -> str:
    if not records:
        return 'No benchmark records.\n'
    frame = records_frame(records)
    ratios = speedups(records)
    frame['speedup'] = [
        f"{ratios[record.total_bytes]:.2f}x"
        if record.backend == Backend.PARALLEL and record.total_bytes in ratios else ''
        for record in records
    ]
    return frame.to_string(
        index=False,
        formatters={
            'time_seconds': '{:.6f}'.format,
            'throughput_bps': '{:.2f}'.format,
        },
    ) + '\n'


def _csv(records: Sequence[BenchmarkRecord]) -> str:
    return records_frame(records).to_csv(index=False, lineterminator='\n')


def emit_report(records: Sequence[BenchmarkRecord], format: str = 'console') -> str:
    """Render records as an aligned console table or as CSV."""
    records = list(records)
    if format == 'console':
        return _console(records)
    if format == 'csv':
        return _csv(records)
    raise ReportFormatError(f"Unknown report format {format!r}; expected one of {REPORT_FORMATS}")


def parse_csv_report(text: str) -> List[BenchmarkRecord]:
    """Inverse of ``emit_report(records, 'csv')``."""
    from .serializers import BenchmarkRecordSerializer

    try:
        frame = pd.read_csv(io.StringIO(text), float_precision='round_trip', dtype={'backend': str})
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise ReportFormatError(f"Unreadable CSV report: {str(e)}")
    if tuple(frame.columns) != CSV_COLUMNS:
        raise ReportFormatError(f"CSV columns {list(frame.columns)} do not match {list(CSV_COLUMNS)}")

    records = []
    for index, row in enumerate(frame.to_dict(orient='records'), start=2):
        serializer = BenchmarkRecordSerializer(data=row)
        if not serializer.is_valid():
            raise ReportFormatError(f"CSV row {index} is invalid: {serializer.errors}")
        records.append(serializer.save())
    return records
