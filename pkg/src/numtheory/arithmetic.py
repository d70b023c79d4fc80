"""
Arithmetic functions: Euler phi, Moebius, square-free divisor count.
"""

from sympy import divisors, primefactors
from sympy.functions.combinatorial.numbers import mobius, primenu, totient

from src.errors import InvalidInputError


def _require_positive(v: int) -> None:
    if v < 1:
        raise InvalidInputError(f"argument must be a positive integer, got {v}")


def euler_phi(v: int) -> int:
    """Euler's totient."""
    _require_positive(v)
    return int(totient(v))


def moebius(v: int) -> int:
    """Moebius function, in {-1, 0, 1}."""
    _require_positive(v)
    return int(mobius(v))


def tau_star(v: int) -> int:
    """Number of square-free divisors of v, i.e. 2^omega(v)."""
    _require_positive(v)
    return 2 ** int(primenu(v))


def phi_by_moebius_sum(v: int) -> int:
    """phi(v) recomputed as sum over d | v of d * mu(v/d)."""
    _require_positive(v)
    return sum(d * moebius(v // d) for d in divisors(v))


def check_prime_chain_bound(t: int) -> bool:
    """sum over primes p | t of (p + 1) <= t + 1."""
    _require_positive(t)
    return sum(p + 1 for p in primefactors(t)) <= t + 1
