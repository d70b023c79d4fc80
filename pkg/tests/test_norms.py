"""
Tests for the norm identity and cyclotomic unit norms.
"""

import pytest

from src.errors import InvalidInputError
from src.algebraic import check_norm_identity, norm_identity_report, unit_difference_check
from src.algebraic.cyclofield import units_mod
from src.lucas import LucasParams


@pytest.mark.slow
@pytest.mark.parametrize("a,b", [(1, 1), (3, 1), (3, -1), (4, -1), (2, 1)])
def test_norm_identity_grid(a, b):
    params = LucasParams(a, b)
    for k in (1, 2):
        for v in range(1, 13):
            for j in units_mod(v):
                assert check_norm_identity(params, k, v, j), (params, k, v, j)


def test_report_outside_cyclotomic(fib):
    report = norm_identity_report(fib, 1, 3, 1)
    assert report.v_star == 6
    assert report.delta == -1
    assert not report.alpha_in_cyclotomic
    assert report.degree_over_cyclotomic == 2
    assert report.holds and report.single_norm_holds


def test_report_inside_cyclotomic(fib):
    # sqrt(5) lies in Q(zeta_5)
    report = norm_identity_report(fib, 1, 5, 1)
    assert report.alpha_in_cyclotomic
    assert report.degree_over_cyclotomic == 1
    assert report.holds


def test_report_serializes_rhs_as_string(fib):
    data = norm_identity_report(fib, 2, 4, 1).to_dict()
    assert isinstance(data["rhs"], str)
    assert int(data["rhs"]) > 0


def test_norm_identity_rejects_non_coprime_j(fib):
    with pytest.raises(InvalidInputError):
        norm_identity_report(fib, 1, 6, 3)


@pytest.mark.parametrize("ord1,ord2", [(2, 3), (3, 4), (5, 6), (7, 9)])
def test_unit_difference(ord1, ord2):
    assert unit_difference_check(ord1, ord2)


def test_unit_difference_needs_coprime_orders():
    with pytest.raises(InvalidInputError):
        unit_difference_check(2, 4)
    with pytest.raises(InvalidInputError):
        unit_difference_check(1, 3)
