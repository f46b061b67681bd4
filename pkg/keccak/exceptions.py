"""
Custom exceptions for the keccak app.
"""


class KeccakError(Exception):
    """Base exception for permutation, sponge and SHA-3 errors."""
    pass


class InvalidWidthError(KeccakError):
    """Raised when a width is not in the Keccak-p family or an input has the wrong bit length."""
    pass


class InvalidRoundIndexError(KeccakError):
    """Raised when a round index falls outside 0 <= ir < nr."""
    pass


class InvalidParameterError(KeccakError):
    """Raised when a rate, capacity, padding modulus or output length is not usable."""
    pass


class UnknownVariantError(KeccakError):
    """Raised when a function name does not match any SHA-3 or SHAKE variant."""
    pass
