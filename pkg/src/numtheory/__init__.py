"""
Number theory toolkit.
Cyclotomic polynomials, arithmetic functions, gcd identities and short vectors.
"""

from src.numtheory.arithmetic import (
    euler_phi,
    moebius,
    tau_star,
    phi_by_moebius_sum,
    check_prime_chain_bound,
)
from src.numtheory.cyclotomic import (
    CycloPoly,
    cyclotomic,
    cyclotomic_at_one,
    cyclotomic_interval,
    check_cyclotomic_lower_bound,
    check_cyclotomic_tau_bound,
    check_trivial_cyclotomic_bound,
    cyclotomic_resultant_unit,
    poly_gcd_power_minus_one,
    root_of_unity_interval,
    cyclotomic_unit_product,
)
from src.numtheory.gcds import gcd_power_minus_one, lucas_gcd_property
from src.numtheory.lattice import ShortVector, short_vector

__all__ = [
    "euler_phi",
    "moebius",
    "tau_star",
    "phi_by_moebius_sum",
    "check_prime_chain_bound",
    "CycloPoly",
    "cyclotomic",
    "cyclotomic_at_one",
    "cyclotomic_interval",
    "check_cyclotomic_lower_bound",
    "check_cyclotomic_tau_bound",
    "check_trivial_cyclotomic_bound",
    "cyclotomic_resultant_unit",
    "poly_gcd_power_minus_one",
    "root_of_unity_interval",
    "cyclotomic_unit_product",
    "gcd_power_minus_one",
    "lucas_gcd_property",
    "ShortVector",
    "short_vector",
]
