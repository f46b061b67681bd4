"""
Hashing backend integration module.
This module provides an interface for the ways a planned batch can be executed.
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import List, Optional, Sequence, Tuple
import importlib

from django.conf import settings

from ..exceptions import UnknownBackendError


class Backend(str, Enum):
    """Names under which backends are registered."""
    SEQUENTIAL = 'sequential'
    PARALLEL = 'parallel'


class HashBackend(ABC):
    """Abstract base class for batch hashing backends.

    A backend is opened once, may run many batches, and is closed when the
    caller is done with it.
    """

    name: Backend

    def open(self) -> None:
        """Acquire workers or other resources."""

    def close(self) -> None:
        """Release whatever ``open`` acquired."""

    def __enter__(self):
        self.open()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.close()
        return False

    @abstractmethod
    def run(
        self,
        variant_name: str,
        output_bits: Optional[int],
        messages: Sequence[bytes],
        plan: Sequence[Tuple[int, int]],
        out: List[Optional[bytes]],
    ) -> None:
        """Hash every planned range and write each digest into its slot in ``out``.

        Args:
            variant_name: CLI name of the function variant
            output_bits: Output length for XOF variants, None otherwise
            messages: The batch, read-only
            plan: Disjoint (start, end) ranges covering the batch
            out: Pre-sized output list, one slot per message
        """
        pass


def get_hash_backend(backend_name=None, **kwargs) -> HashBackend:
    """Get a hashing backend instance by name.

    Args:
        backend_name: Name of the backend to use. If None, uses HASH_BACKEND from settings.
        **kwargs: Passed to the backend constructor on top of its configured defaults.

    Returns:
        An instance of the specified backend.

    Raises:
        UnknownBackendError: If the backend cannot be found or instantiated.
    """
    from .config import HASH_BACKENDS

    if backend_name is None:
        backend_name = getattr(settings, 'HASH_BACKEND', Backend.PARALLEL.value)
    if isinstance(backend_name, Backend):
        backend_name = backend_name.value

    if backend_name not in HASH_BACKENDS:
        raise UnknownBackendError(f"Unknown hashing backend: {backend_name}")

    backend_config = dict(HASH_BACKENDS[backend_name])
    module_path, class_name = backend_config.pop('class').rsplit('.', 1)
    try:
        module = importlib.import_module(module_path)
        backend_class = getattr(module, class_name)
    except (ImportError, AttributeError) as e:
        raise UnknownBackendError(f"Failed to load hashing backend {backend_name}: {str(e)}")
    backend_config.update(kwargs)
    return backend_class(**backend_config)
