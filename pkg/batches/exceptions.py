"""
Custom exceptions for the batches app.
"""


class BatchError(Exception):
    """Base exception for batch hashing errors."""
    pass


class InvalidEngineConfigError(BatchError):
    """Raised when a worker count, chunk size or backend name is not usable."""
    pass


class MissingOutputLengthError(BatchError):
    """Raised when an XOF batch is submitted without an output length."""
    pass


class InvalidOutputLengthError(BatchError):
    """Raised when output_bits is below one bit or does not fit a fixed-length variant."""
    pass


class UnknownBackendError(BatchError):
    """Raised when no hashing backend is registered under the requested name."""
    pass


class WorkerError(BatchError):
    """Raised when a worker fails while hashing its share of a batch."""
    pass
