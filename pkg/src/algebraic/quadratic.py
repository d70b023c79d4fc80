"""
Exact arithmetic in the real quadratic field Q(sqrt(disc)).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import iv, mp, mpf
from sympy import integer_nthroot

from src.errors import InvalidInputError
from src.lucas.params import LucasParams
from src.lucas.sequences import lucas_u

Rational = Union[int, Fraction]


def _is_square(n: int) -> bool:
    return n >= 0 and integer_nthroot(n, 2)[1]


@dataclass(frozen=True)
class QuadElem:
    """
    x + y sqrt(disc) with rational x, y.

    Mixed arithmetic with ints and Fractions is supported; two elements must
    share the same disc.
    """

    x: Fraction
    y: Fraction
    disc: int

    def __post_init__(self):
        if self.disc < 2 or _is_square(self.disc):
            raise InvalidInputError(f"disc must be a positive non-square, got {self.disc}")
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @classmethod
    def rational(cls, value: Rational, disc: int) -> "QuadElem":
        return cls(Fraction(value), Fraction(0), disc)

    @classmethod
    def sqrt_disc(cls, disc: int) -> "QuadElem":
        return cls(Fraction(0), Fraction(1), disc)

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.disc != self.disc:
                raise InvalidInputError(f"mixed discriminants {self.disc} and {other.disc}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem.rational(other, self.disc)
        return NotImplemented

    def __add__(self, other) -> "QuadElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.x + other.x, self.y + other.y, self.disc)

    __radd__ = __add__

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.x, -self.y, self.disc)

    def __sub__(self, other) -> "QuadElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.x - other.x, self.y - other.y, self.disc)

    def __rsub__(self, other) -> "QuadElem":
        return -self + other

    def __mul__(self, other) -> "QuadElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(
            self.x * other.x + self.disc * self.y * other.y,
            self.x * other.y + self.y * other.x,
            self.disc,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        return QuadElem(self.x / n, -self.y / n, self.disc)

    def __truediv__(self, other) -> "QuadElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QuadElem":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "QuadElem":
        if exponent < 0:
            return self.inverse() ** -exponent
        result = QuadElem.rational(1, self.disc)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        if not isinstance(other, QuadElem):
            return NotImplemented
        return (self.x, self.y, self.disc) == (other.x, other.y, other.disc)

    def __hash__(self) -> int:
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.disc))

    def __bool__(self) -> bool:
        return bool(self.x) or bool(self.y)

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.x, -self.y, self.disc)

    def norm(self) -> Fraction:
        return self.x * self.x - self.disc * self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x

    @property
    def is_rational(self) -> bool:
        return self.y == 0

    def to_mpf(self, precision_bits: int) -> mpf:
        with mp.workprec(precision_bits):
            return mpf(self.x.numerator) / self.x.denominator + mpf(self.y.numerator) / self.y.denominator * mp.sqrt(self.disc)

    def to_interval(self):
        """Enclosure at the current `iv` precision."""
        x = iv.mpf(self.x.numerator) / iv.mpf(self.x.denominator)
        y = iv.mpf(self.y.numerator) / iv.mpf(self.y.denominator)
        return x + y * iv.sqrt(iv.mpf(self.disc))

    def __str__(self) -> str:
        return f"{self.x} + {self.y}*sqrt({self.disc})"


def canonical_alpha(params: LucasParams) -> QuadElem:
    """alpha = (|a| + sqrt(delta)) / 2, the root greater than 1."""
    return QuadElem(Fraction(params.abs_a, 2), Fraction(1, 2), params.delta)


def canonical_beta(params: LucasParams) -> QuadElem:
    return canonical_alpha(params).conjugate()


def gamma_elem(params: LucasParams) -> QuadElem:
    """gamma = -b alpha^2."""
    return -params.b * canonical_alpha(params) ** 2


def check_gamma_representation(params: LucasParams, m: int) -> bool:
    """
    U_m = (-b alpha)^(1-m) (gamma^m - 1)/(gamma - 1), exactly.

    Checked for the normalized pair (a > 0), whose alpha is the canonical one.
    """
    if m < 1:
        raise InvalidInputError(f"m must be >= 1, got {m}")
    params = params.normalized()
    alpha = canonical_alpha(params)
    gamma = gamma_elem(params)
    value = (-params.b * alpha) ** (1 - m) * (gamma ** m - 1) / (gamma - 1)
    return value == lucas_u(params, m)
