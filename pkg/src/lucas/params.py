"""
Lucas sequence parameters.
The pair (a, b) with b = +-1 and the derived discriminant.
"""

from dataclasses import dataclass

from src.errors import InvalidInputError

# alpha/beta is a root of unity for these pairs
DEGENERATE_PAIRS = frozenset({(0, 1), (0, -1), (1, -1), (-1, -1), (2, -1), (-2, -1)})


@dataclass(frozen=True)
class LucasParams:
    """
    Parameters of U_{n+2} = a U_{n+1} + b U_n.

    Raises InvalidInputError on construction when b is not +-1, the
    discriminant is not positive or (a, b) is one of the excluded pairs.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.b not in (-1, 1):
            raise InvalidInputError(f"b must be -1 or 1, got {self.b}")
        if (self.a, self.b) in DEGENERATE_PAIRS:
            raise InvalidInputError(
                f"(a, b) = ({self.a}, {self.b}) is degenerate: "
                "(a, b) must avoid (0, +-1), (+-1, -1) and (+-2, -1)"
            )
        if self.delta <= 0:
            raise InvalidInputError(f"a^2 + 4b must be positive, got {self.delta} for ({self.a}, {self.b})")

    @property
    def delta(self) -> int:
        """Discriminant a^2 + 4b."""
        return self.a * self.a + 4 * self.b

    @property
    def abs_a(self) -> int:
        return abs(self.a)

    @property
    def is_fibonacci(self) -> bool:
        return (self.a, self.b) == (1, 1)

    def q_power(self, n: int) -> int:
        """(-b)^n, which is always +-1."""
        return 1 if self.b == -1 or n % 2 == 0 else -1

    def flipped(self) -> "LucasParams":
        """The pair (-a, b); U_n changes by the sign (-1)^(n-1)."""
        return LucasParams(-self.a, self.b)

    def normalized(self) -> "LucasParams":
        """The pair with a > 0."""
        return self if self.a > 0 else self.flipped()

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def is_valid_pair(a: int, b: int) -> bool:
    """True if LucasParams(a, b) can be built."""
    try:
        LucasParams(a, b)
    except InvalidInputError:
        return False
    return True


def scan_params(a_min: int, a_max: int, b_values=(-1, 1)) -> list[LucasParams]:
    """All valid params with a in [a_min, a_max] and b in b_values, in (a, b) order."""
    return [
        LucasParams(a, b)
        for a in range(a_min, a_max + 1)
        for b in sorted(b_values)
        if is_valid_pair(a, b)
    ]
