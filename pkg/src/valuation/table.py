"""
Rank of appearance and the p-adic valuation table for U_m.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from loguru import logger
from sympy import isprime, multiplicity

from src.errors import InternalError, InvalidInputError
from src.lucas.params import LucasParams
from src.lucas.sequences import lucas_u

# largest index whose U_m the factorization oracle will materialize
MATERIALIZE_LIMIT = 5000


@dataclass(frozen=True)
class ValuationReport:
    p: int
    m: int
    nu_table: int
    nu_direct: Optional[int]
    f_p: int

    @property
    def agrees(self) -> bool:
        return self.nu_direct is None or self.nu_direct == self.nu_table


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise InvalidInputError(f"{p} is not prime")


@lru_cache(maxsize=4096)
def _rank(a: int, b: int, p: int) -> int:
    cap = p * p
    prev, cur = 0, 1 % p
    for k in range(1, cap + 1):
        if cur == 0:
            return k
        prev, cur = cur, (a * cur + b * prev) % p
    raise InternalError(f"rank of appearance of {p} for ({a},{b}) exceeded the cap {cap}")


def rank_of_appearance(params: LucasParams, p: int) -> int:
    """
    Least k >= 1 with p | U_k, by scanning U_k mod p.

    Raises:
        InvalidInputError: p is not prime.
        InternalError: no hit within p^2 steps.
    """
    _require_prime(p)
    return _rank(params.a, params.b, p)


def rank_bound_holds(params: LucasParams, p: int) -> bool:
    """f_p = p when p | delta, otherwise f_p <= p + 1."""
    f_p = rank_of_appearance(params, p)
    if params.delta % p == 0:
        return f_p == p
    return f_p <= p + 1


def _nu(p: int, n: int) -> int:
    return int(multiplicity(p, abs(n)))


def nu_p_of_lucas(params: LucasParams, p: int, m: int) -> int:
    """
    nu_p(U_m) from the valuation table.

    Rows:
        p odd:          0 if f_p does not divide m, else nu_p(U_f) + nu_p(m/f)
        p = 2, a even:  0 for odd m, else nu_2(U_2) + nu_2(m/2)
        p = 2, a odd:   0 unless 3 | m; nu_2(U_3) if m = 3 (mod 6);
                        nu_2(U_6) + nu_2(m/2) if m = 0 (mod 6)
    """
    _require_prime(p)
    if m < 1:
        raise InvalidInputError(f"m must be positive, got {m}")
    if p != 2:
        f_p = rank_of_appearance(params, p)
        if m % f_p:
            return 0
        return _nu(p, lucas_u(params, f_p)) + _nu(p, m // f_p)
    if params.a % 2 == 0:
        if m % 2:
            return 0
        return _nu(2, lucas_u(params, 2)) + _nu(2, m // 2)
    if m % 3:
        return 0
    if m % 6 == 3:
        return _nu(2, lucas_u(params, 3))
    return _nu(2, lucas_u(params, 6)) + _nu(2, m // 2)


def nu_p_direct(params: LucasParams, p: int, m: int) -> int:
    """nu_p of the exact integer U_m (oracle)."""
    _require_prime(p)
    if m < 1:
        raise InvalidInputError(f"m must be positive, got {m}")
    return _nu(p, lucas_u(params, m))


def valuation_slack(params: LucasParams, p: int) -> int:
    """delta_{p,2}: nu_2((a^2 + 3b)/2) for p = 2 and odd a, else 0."""
    if p != 2 or params.a % 2 == 0:
        return 0
    return _nu(2, (params.a ** 2 + 3 * params.b) // 2)


def check_valuation_inequality(params: LucasParams, p: int, m: int) -> bool:
    """nu_p(U_m) <= nu_p(U_{f_p}) + nu_p(m) + delta_{p,2}."""
    f_p = rank_of_appearance(params, p)
    bound = _nu(p, lucas_u(params, f_p)) + _nu(p, m) + valuation_slack(params, p)
    return nu_p_of_lucas(params, p, m) <= bound


def valuation_report(params: LucasParams, p: int, m: int) -> ValuationReport:
    """
    Table value paired with the factorization oracle.

    The oracle runs only when m <= MATERIALIZE_LIMIT.

    Raises:
        InternalError: table and oracle disagree.
    """
    nu_table = nu_p_of_lucas(params, p, m)
    nu_direct = nu_p_direct(params, p, m) if m <= MATERIALIZE_LIMIT else None
    report = ValuationReport(
        p=p,
        m=m,
        nu_table=nu_table,
        nu_direct=nu_direct,
        f_p=rank_of_appearance(params, p),
    )
    if not report.agrees:
        logger.error(f"Valuation table mismatch for {params}: {report}")
        raise InternalError(f"valuation table disagrees with factorization: {report}")
    return report
