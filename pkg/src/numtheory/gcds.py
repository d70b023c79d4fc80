"""
Integer shadows of the gcd identities (gamma^m - 1, gamma^n - 1) = (gamma^d - 1).
"""

from math import gcd

from src.errors import InternalError, InvalidInputError
from src.lucas.params import LucasParams
from src.lucas.sequences import lucas_u


def gcd_power_minus_one(gamma: int, m: int, n: int) -> int:
    """
    gcd(gamma^m - 1, gamma^n - 1), asserted equal to |gamma^gcd(m,n) - 1|.

    Raises:
        InvalidInputError: |gamma| < 2 or non-positive exponents.
        InternalError: the identity fails.
    """
    if abs(gamma) < 2:
        raise InvalidInputError(f"|gamma| must be >= 2, got {gamma}")
    if m < 1 or n < 1:
        raise InvalidInputError(f"m and n must be positive, got m={m}, n={n}")
    g = gcd(gamma ** m - 1, gamma ** n - 1)
    expected = abs(gamma ** gcd(m, n) - 1)
    if g != expected:
        raise InternalError(f"gcd({gamma}^{m}-1, {gamma}^{n}-1) = {g}, expected {expected}")
    return g


def lucas_gcd_property(params: LucasParams, m: int, n: int) -> bool:
    """gcd(U_m, U_n) = |U_gcd(m,n)|."""
    if m < 1 or n < 1:
        raise InvalidInputError(f"m and n must be positive, got m={m}, n={n}")
    return gcd(lucas_u(params, m), lucas_u(params, n)) == abs(lucas_u(params, gcd(m, n)))
