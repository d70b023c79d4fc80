"""
Short vectors: small (u, v) with a*u + b*v small.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt

from src.errors import InternalError, InvalidInputError


@dataclass(frozen=True)
class ShortVector:
    u: int
    v: int
    combo: int

    def satisfies(self, a: int, b: int, x) -> bool:
        """Whether the three bounds hold for (a, b, X)."""
        x = Fraction(x)
        r = isqrt(floor(x))
        return (
            (self.u, self.v) != (0, 0)
            and max(abs(self.u), abs(self.v)) <= r
            and self.combo == a * self.u + b * self.v
            and self.combo * self.combo <= 9 * x
        )


def _clip(value: int, r: int) -> int:
    return max(-r, min(r, value))


def short_vector(a: int, b: int, x) -> ShortVector:
    """
    Find (u, v) != (0, 0) with max(|u|, |v|) <= sqrt(X) and |a u + b v| <= 3 sqrt(X).

    Returns the lexicographically smallest (|combo|, |u|, |v|) witness,
    preferring positive u (then positive v) on sign ties.

    Args:
        a: Positive integer
        b: Positive integer
        x: Real bound X >= 3 with max(a, b) <= X (int, Fraction, float or str)
    """
    x = Fraction(x)
    if a < 1 or b < 1:
        raise InvalidInputError(f"a and b must be positive, got a={a}, b={b}")
    if x < 3:
        raise InvalidInputError(f"X must be >= 3, got {x}")
    if max(a, b) > x:
        raise InvalidInputError(f"max(a, b) must be <= X, got a={a}, b={b}, X={x}")

    r = isqrt(floor(x))
    best = None
    for u in range(-r, r + 1):
        # |a u + b v| is convex in v, so the clipped neighbours of -a u / b suffice
        target = Fraction(-a * u, b)
        for v in {_clip(floor(target), r), _clip(-floor(-target), r)}:
            if u == 0 and v == 0:
                continue
            combo = a * u + b * v
            key = (abs(combo), abs(u), abs(v), -u, -v)
            if best is None or key < best[0]:
                best = (key, ShortVector(u=u, v=v, combo=combo))

    # u = 0 only offers v = 0 as its minimizer; r >= 1 since X >= 3
    for v in (1, -1):
        key = (b, 0, 1, 0, -v)
        if key < best[0]:
            best = (key, ShortVector(u=0, v=v, combo=b * v))

    witness = best[1]
    if not witness.satisfies(a, b, x):
        raise InternalError(f"short vector {witness} violates the bounds for a={a}, b={b}, X={x}")
    return witness
