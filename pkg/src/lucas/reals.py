"""
High-precision and directed-rounding real arithmetic.

Point values use mpmath's `mp` context; inequalities are decided with the
interval context `iv` so that a check never passes by rounding luck.
"""

from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from loguru import logger
from mpmath import iv, mp, mpf

from src.config import Config
from src.errors import CertificationError, InvalidInputError
from src.lucas.params import LucasParams


@dataclass(frozen=True)
class RealQuadApprox:
    """A real quadratic irrational to `precision_bits` (relative error <= 2^(1-bits))."""

    value: mpf
    precision_bits: int

    def interval(self):
        """An `iv` interval certainly containing the exact value."""
        x = iv.mpf(self.value)
        radius = abs(x) * iv.mpf(2) ** (1 - self.precision_bits)
        return x + iv.mpf((-1, 1)) * radius

    def __float__(self) -> float:
        return float(self.value)


@contextmanager
def interval_precision(bits: int):
    """Temporarily set the working precision of mpmath's `iv` context."""
    saved = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = saved


def to_interval(x):
    """
    Convert an exact or approximate real to an enclosing interval.

    Ints, Fractions and strings are enclosed exactly; mpf and float values
    are treated as exact; a RealQuadApprox contributes its error radius.
    """
    if isinstance(x, RealQuadApprox):
        return x.interval()
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / iv.mpf(x.denominator)
    return iv.mpf(x)


def alpha_approx(params: LucasParams, precision_bits: int = None) -> RealQuadApprox:
    """
    The dominant root alpha = (|a| + sqrt(delta)) / 2 of x^2 - |a|x - b.

    Args:
        params: Lucas parameters (a may be negative)
        precision_bits: Working precision, at least 16

    Returns:
        RealQuadApprox with alpha > 1.
    """
    bits = precision_bits or Config.PRECISION_BITS
    if bits < 16:
        raise InvalidInputError(f"precision_bits must be >= 16, got {bits}")
    with mp.workprec(bits):
        value = (params.abs_a + mp.sqrt(params.delta)) / 2
    return RealQuadApprox(value=value, precision_bits=bits)


def alpha_interval(params: LucasParams):
    """Interval enclosure of alpha at the current `iv` precision."""
    return (iv.mpf(params.abs_a) + iv.sqrt(iv.mpf(params.delta))) / 2


def certify_integer(x, precision_bits: int, what: str = "value") -> int:
    """
    The unique integer within distance 1/2 of an interval (real or complex).

    Raises:
        CertificationError: the enclosure is too wide to pin an integer.
    """
    half = iv.mpf(1) / 2
    if hasattr(x, "imag") and (abs(x.imag) < half) is not True:
        raise CertificationError(f"{what} is not certifiably real", precision_bits)
    real = x.real
    with mp.workprec(max(iv.prec, precision_bits)):
        candidate = int(mp.nint(mp.mpf(real.mid)))
    if (abs(real - candidate) < half) is not True:
        raise CertificationError(f"{what} is not certifiably an integer", precision_bits)
    return candidate


def decide(predicate: Callable[[], Optional[bool]], precision_bits: int = None, what: str = "inequality") -> bool:
    """
    Evaluate an interval predicate, doubling precision while it is undecided.

    Args:
        predicate: Callable run under `interval_precision`; returns True, False
            or None (None means the intervals overlap)
        precision_bits: Starting precision
        what: Label for logs and errors

    Returns:
        The certified truth value.
    """
    bits = precision_bits or Config.PRECISION_BITS
    while bits <= Config.MAX_PRECISION_BITS:
        with interval_precision(bits):
            verdict = predicate()
        if verdict is not None:
            return bool(verdict)
        logger.debug(f"{what}: undecided at {bits} bits, doubling")
        bits *= 2
    raise CertificationError(f"{what} could not be decided", bits // 2)
