"""
Custom exceptions for the bench app.
"""


class BenchError(Exception):
    """Base exception for benchmark and vector-verification errors."""
    pass


class WorkloadError(BenchError):
    """Raised when a workload or benchmark parameter is invalid."""
    pass


class ReportFormatError(BenchError):
    """Raised when a report cannot be rendered or parsed."""
    pass


class BackendMismatchError(BenchError):
    """Raised when two backends produce different digests for the same workload."""
    pass


class VectorFileError(BenchError):
    """Raised when a response file is malformed; carries the offending line number."""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
