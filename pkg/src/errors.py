"""
Exception hierarchy shared by every package.
"""


class LucasDivError(Exception):
    """Base error for the library."""


class InvalidInputError(LucasDivError, ValueError):
    """Precondition violation (degenerate params, bad modulus, gcd guard...)."""


class InternalError(LucasDivError):
    """An invariant that must never fail did fail."""


class TheoremViolation(LucasDivError):
    """A scan record came out with bound_ok = false."""

    def __init__(self, record, message: str = None):
        self.record = record
        super().__init__(message or f"bound violated: {record}")


class CheckpointMismatch(LucasDivError):
    """Resume attempted under a config that differs from the checkpoint."""


class CertificationError(LucasDivError):
    """
    A numeric value could not be certified at the working precision.

    Callers retry with `precision_bits * 2` until Config.MAX_PRECISION_BITS.
    """

    def __init__(self, message: str, precision_bits: int):
        self.precision_bits = precision_bits
        super().__init__(f"{message} (at {precision_bits} bits)")
