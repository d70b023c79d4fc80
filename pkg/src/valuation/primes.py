"""
Finite prime sets.
"""

from dataclasses import dataclass

from sympy import isprime, primerange

from src.errors import InvalidInputError


@dataclass(frozen=True)
class PrimeSet:
    """A sorted set of distinct primes."""

    primes: tuple[int, ...]

    def __post_init__(self):
        for p in self.primes:
            if not isprime(p):
                raise InvalidInputError(f"{p} is not prime")
        if list(self.primes) != sorted(set(self.primes)):
            raise InvalidInputError(f"primes must be sorted and distinct, got {self.primes}")

    @classmethod
    def of(cls, primes) -> "PrimeSet":
        """Build from any iterable; duplicates are merged."""
        return cls(tuple(sorted(set(int(p) for p in primes))))

    @classmethod
    def up_to(cls, bound: int) -> "PrimeSet":
        return cls(tuple(primerange(2, bound + 1)))

    @classmethod
    def parse(cls, text: str) -> "PrimeSet":
        """Parse a comma separated list such as "2,3,5"."""
        try:
            values = [int(part) for part in text.split(",") if part.strip()]
        except ValueError as e:
            raise InvalidInputError(f"could not parse prime list '{text}'") from e
        return cls.of(values)

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def __contains__(self, p) -> bool:
        return p in self.primes
