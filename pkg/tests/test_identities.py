"""
Tests for the closed-form identities.
"""

import pytest

from src.errors import InvalidInputError
from src.lucas import (
    CommentIdentity,
    LucasParams,
    applicable_identity,
    check_comment_identity,
    check_fibonacci_identities,
    check_near_miss,
    check_near_miss_undoubled,
    check_periodicity_congruence,
    check_periodicity_identity,
    check_sandwich_bound,
    comment_identity_applies,
    scan_params,
)


def test_periodicity_identity_small_grid():
    for params in scan_params(-4, 4):
        for m in range(2, 12):
            for n in range(0, 25):
                assert check_periodicity_identity(params, m, n), (params, m, n)


def test_periodicity_congruence(fib):
    for m in range(2, 30):
        for n in (0, 1, 17, 1000):
            assert check_periodicity_congruence(fib, m, n)


def test_periodicity_rejects_small_m(fib):
    with pytest.raises(InvalidInputError):
        check_periodicity_identity(fib, 1, 0)


@pytest.mark.parametrize(
    "b,k,expected",
    [
        (1, 1, CommentIdentity.SQSUM),
        (1, 2, CommentIdentity.DIFF),
        (1, 3, CommentIdentity.SQSUM),
        (1, 4, CommentIdentity.SUM),
        (1, 6, CommentIdentity.DIFF),
        (-1, 2, CommentIdentity.SUM),
        (-1, 4, CommentIdentity.SUM),
        (-1, 1, None),
        (-1, 3, None),
    ],
)
def test_applicable_identity(b, k, expected):
    assert applicable_identity(LucasParams(3, b), k) == expected


def test_exponents():
    assert [w.exponent for w in CommentIdentity] == [1, 2, 4]


def test_comment_identities_hold():
    for params in scan_params(1, 5):
        for k in range(1, 9):
            which = applicable_identity(params, k)
            if which is None:
                continue
            for n in range(0, 20):
                assert check_comment_identity(params, k, n, which), (params, k, n, which)


def test_comment_identity_hypotheses_enforced(fib):
    assert not comment_identity_applies(fib, 2, CommentIdentity.SUM)
    with pytest.raises(InvalidInputError):
        check_comment_identity(fib, 2, 3, CommentIdentity.SUM)


def test_near_miss_first_case():
    # U_6 = 780 divides 4 * 4095 but not 4095
    assert check_near_miss(1)
    assert not check_near_miss_undoubled(1)


def test_near_miss_range():
    assert all(check_near_miss(n) for n in range(0, 40))
    assert not all(check_near_miss_undoubled(n) for n in range(0, 40))


def test_fibonacci_identities():
    assert all(check_fibonacci_identities(n) for n in range(1, 200))
    with pytest.raises(InvalidInputError):
        check_fibonacci_identities(0)


@pytest.mark.parametrize("a,b", [(1, 1), (3, -1), (4, 1), (5, -1)])
def test_sandwich_bound(a, b):
    params = LucasParams(a, b)
    assert all(check_sandwich_bound(params, n) for n in range(1, 41))


def test_sandwich_bound_needs_positive_a():
    with pytest.raises(InvalidInputError):
        check_sandwich_bound(LucasParams(-1, 1), 3)
