"""
Tests for arithmetic functions, gcd identities and short vectors.
"""

from fractions import Fraction
from math import floor, isqrt

import pytest

from src.errors import InvalidInputError
from src.lucas import scan_params
from src.numtheory import (
    ShortVector,
    check_prime_chain_bound,
    euler_phi,
    gcd_power_minus_one,
    lucas_gcd_property,
    moebius,
    phi_by_moebius_sum,
    short_vector,
    tau_star,
)


def test_arithmetic_values():
    assert [euler_phi(v) for v in (1, 2, 9, 12, 105)] == [1, 1, 6, 4, 48]
    assert [moebius(v) for v in (1, 2, 4, 6, 30)] == [1, -1, 0, 1, -1]
    assert [tau_star(v) for v in (1, 8, 12, 30)] == [1, 2, 4, 8]


def test_phi_by_moebius_sum():
    assert all(phi_by_moebius_sum(v) == euler_phi(v) for v in range(1, 301))


def test_prime_chain_bound():
    assert all(check_prime_chain_bound(t) for t in range(1, 2001))


def test_arithmetic_rejects_zero():
    with pytest.raises(InvalidInputError):
        euler_phi(0)


@pytest.mark.parametrize("gamma,m,n,expected", [(2, 6, 4, 3), (3, 5, 10, 242), (-2, 3, 6, 9), (10, 4, 6, 99)])
def test_gcd_power_minus_one(gamma, m, n, expected):
    assert gcd_power_minus_one(gamma, m, n) == expected


def test_gcd_power_minus_one_rejects_unit_gamma():
    with pytest.raises(InvalidInputError):
        gcd_power_minus_one(1, 2, 3)


def test_lucas_gcd_property():
    for params in scan_params(1, 4):
        for m in range(1, 25):
            for n in range(1, 25):
                assert lucas_gcd_property(params, m, n), (params, m, n)


def _brute_min_combo(a: int, b: int, r: int) -> int:
    return min(
        abs(a * u + b * v)
        for u in range(-r, r + 1)
        for v in range(-r, r + 1)
        if (u, v) != (0, 0)
    )


@pytest.mark.parametrize("a,b,x", [(5, 7, 10), (1, 1, 3), (13, 21, 21), (100, 37, 150), (2, 9, "9.5")])
def test_short_vector(a, b, x):
    w = short_vector(a, b, x)
    assert isinstance(w, ShortVector)
    assert w.satisfies(a, b, x)
    r = isqrt(floor(Fraction(x)))
    assert abs(w.combo) == _brute_min_combo(a, b, r)


def test_short_vector_exhaustive_small():
    for x in (3, 7, 16):
        for a in range(1, x + 1):
            for b in range(1, x + 1):
                assert short_vector(a, b, x).satisfies(a, b, x)


@pytest.mark.parametrize("a,b,x", [(0, 1, 5), (1, 1, 2), (9, 1, 8)])
def test_short_vector_rejects_bad_input(a, b, x):
    with pytest.raises(InvalidInputError):
        short_vector(a, b, x)
