"""
Tests for Lucas parameters and sequence evaluation.
"""

import pytest

from src.errors import InvalidInputError
from src.lucas import (
    DEGENERATE_PAIRS,
    LucasParams,
    is_valid_pair,
    lucas_pair,
    lucas_prefix,
    lucas_u,
    lucas_u_mod,
    lucas_v,
    lucas_v_mod,
    naive_lucas_u,
    naive_lucas_v,
    scan_params,
)

SAMPLE_PARAMS = [LucasParams(a, b) for a, b in [(1, 1), (2, 1), (3, -1), (-3, 1), (4, -1), (-5, -1), (6, 1)]]


@pytest.mark.parametrize("a,b", sorted(DEGENERATE_PAIRS))
def test_degenerate_pairs_rejected(a, b):
    with pytest.raises(InvalidInputError):
        LucasParams(a, b)


@pytest.mark.parametrize("a,b", [(1, 2), (3, 0), (1, -3)])
def test_bad_b_rejected(a, b):
    assert not is_valid_pair(a, b)


def test_delta_and_normalized():
    p = LucasParams(-3, -1)
    assert p.delta == 5
    assert p.normalized() == LucasParams(3, -1)
    assert LucasParams(2, 1).normalized() == LucasParams(2, 1)


def test_scan_params_skips_degenerate():
    params = scan_params(1, 3)
    pairs = [(p.a, p.b) for p in params]
    assert (1, -1) not in pairs
    assert (2, -1) not in pairs
    assert pairs == [(1, 1), (2, 1), (3, -1), (3, 1)]


@pytest.mark.parametrize(
    "a,b,n,expected",
    [(1, 1, 10, 55), (2, 1, 5, 29), (4, -1, 6, 780), (1, 1, 0, 0), (1, 1, 1, 1)],
)
def test_lucas_u_examples(a, b, n, expected):
    assert lucas_u(LucasParams(a, b), n) == expected


def test_lucas_v_example():
    assert lucas_v(LucasParams(3, 1), 4) == 119
    assert lucas_v(LucasParams(1, 1), 0) == 2


@pytest.mark.parametrize("params", SAMPLE_PARAMS, ids=str)
def test_doubling_matches_recurrence(params):
    for n in range(0, 80):
        pair = lucas_pair(params, n)
        assert pair.u == naive_lucas_u(params, n)
        assert pair.v == naive_lucas_v(params, n)


def test_negative_a_sign_flip():
    p, q = LucasParams(3, 1), LucasParams(-3, 1)
    for n in range(1, 30):
        assert lucas_u(q, n) == (-1) ** (n - 1) * lucas_u(p, n)


def test_large_index_pair_identity(fib):
    n = 5000
    pair = lucas_pair(fib, n)
    assert 5 * pair.u ** 2 + 4 == pair.v ** 2


def test_negative_index_rejected(fib):
    with pytest.raises(InvalidInputError):
        lucas_u(fib, -1)


@pytest.mark.parametrize("a,b,n,modulus,expected", [(1, 1, 10, 13, 3), (2, 1, 5, 12, 5)])
def test_lucas_u_mod_examples(a, b, n, modulus, expected):
    assert lucas_u_mod(LucasParams(a, b), n, modulus) == expected


@pytest.mark.parametrize("params", SAMPLE_PARAMS, ids=str)
def test_modular_matches_exact(params):
    for modulus in (2, 7, 10, 97, 1024):
        for n in range(0, 60):
            assert lucas_u_mod(params, n, modulus) == lucas_u(params, n) % modulus
            assert lucas_v_mod(params, n, modulus) == lucas_v(params, n) % modulus


def test_lucas_u_mod_rejects_small_modulus(fib):
    with pytest.raises(InvalidInputError):
        lucas_u_mod(fib, 5, 1)
    with pytest.raises(InvalidInputError):
        lucas_u_mod(fib, -2, 7)
    with pytest.raises(InvalidInputError):
        lucas_v_mod(fib, -2, 7)


def test_prefix(fib):
    prefix = lucas_prefix(fib, 10)
    assert [p.u for p in prefix] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert [p.v for p in prefix][:5] == [2, 1, 3, 4, 7]
    assert prefix[7].index == 7


def test_prefix_pairs_are_checked(monkeypatch):
    import src.lucas.sequences as sequences

    seen = []
    real_check = sequences._check_pair

    def spy(params, pair):
        seen.append(pair.index)
        return real_check(params, pair)

    monkeypatch.setattr(sequences, "_check_pair", spy)
    lucas_prefix(LucasParams(3, -1), 12)
    assert seen == list(range(13))


def test_prefix_rejects_negative(fib):
    with pytest.raises(InvalidInputError):
        lucas_prefix(fib, -1)


def test_modular_random_large_indices(rng):
    for _ in range(40):
        params = rng.choice(SAMPLE_PARAMS)
        n = rng.randint(100, 3000)
        modulus = rng.randint(2, 10 ** 12)
        assert lucas_u_mod(params, n, modulus) == lucas_u(params, n) % modulus
