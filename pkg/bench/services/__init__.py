"""
Services package for the bench app.

This package contains the benchmark sweep and known-answer verification
behind the ``bench`` and ``vectors`` commands.
"""

from .benchmark_service import BenchmarkOutcome, BenchmarkService, measure_batch, run_benchmark  # noqa
from .vector_service import VectorReport, parse_response_file, parse_response_text, verify_vectors  # noqa

__all__ = [
    'BenchmarkOutcome',
    'BenchmarkService',
    'VectorReport',
    'measure_batch',
    'parse_response_file',
    'parse_response_text',
    'run_benchmark',
    'verify_vectors',
]
