"""
S-parts of Lucas numbers and the valuation lemma bound.
"""

from math import lcm

from src.errors import InvalidInputError
from src.lucas.params import LucasParams
from src.lucas.reals import alpha_interval, decide
from src.lucas.sequences import lucas_u
from src.valuation.primes import PrimeSet
from src.valuation.table import nu_p_of_lucas, rank_of_appearance


def s_part(params: LucasParams, primes: PrimeSet, m: int) -> int:
    """(U_m)_S = prod over p in S of p^nu_p(U_m), from the valuation table."""
    if m < 1:
        raise InvalidInputError(f"m must be positive, got {m}")
    result = 1
    for p in primes:
        result *= p ** nu_p_of_lucas(params, p, m)
    return result


def s_part_direct(params: LucasParams, primes: PrimeSet, m: int) -> int:
    """(U_m)_S by stripping the S-primes off the exact U_m (oracle)."""
    value = abs(lucas_u(params, m))
    result = 1
    for p in primes:
        while value % p == 0:
            value //= p
            result *= p
    return result


def appearance_lcm(params: LucasParams, primes: PrimeSet) -> int:
    """lcm of U_{f_p} over p in S (1 for the empty set)."""
    return lcm(1, *(abs(lucas_u(params, rank_of_appearance(params, p))) for p in primes))


def check_valuation_bound(params: LucasParams, primes: PrimeSet, m: int, precision_bits: int = None) -> bool:
    """
    (U_m)_S <= alpha^2 m lcm[U_{f_p} : p in S].

    Decided against the lower end of the interval enclosing the right side.

    Raises:
        InvalidInputError: a < 1.
    """
    if params.a < 1:
        raise InvalidInputError(f"valuation bound needs a >= 1, got a={params.a}")
    lhs = s_part(params, primes, m)
    factor = m * appearance_lcm(params, primes)

    def predicate():
        return alpha_interval(params) ** 2 * factor >= lhs

    return decide(predicate, precision_bits, what=f"valuation bound {params} m={m}")
