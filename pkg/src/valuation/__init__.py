# Valuation module
from .primes import PrimeSet
from .table import (
    MATERIALIZE_LIMIT,
    ValuationReport,
    rank_of_appearance,
    rank_bound_holds,
    nu_p_of_lucas,
    nu_p_direct,
    valuation_slack,
    check_valuation_inequality,
    valuation_report,
)
from .spart import s_part, s_part_direct, appearance_lcm, check_valuation_bound

__all__ = [
    "PrimeSet",
    "MATERIALIZE_LIMIT",
    "ValuationReport",
    "rank_of_appearance",
    "rank_bound_holds",
    "nu_p_of_lucas",
    "nu_p_direct",
    "valuation_slack",
    "check_valuation_inequality",
    "valuation_report",
    "s_part",
    "s_part_direct",
    "appearance_lcm",
    "check_valuation_bound",
]
