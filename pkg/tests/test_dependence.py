"""
Tests for quadratic subfields of cyclotomic fields and dependence witnesses.
"""

from fractions import Fraction

import pytest
from mpmath import mp

from src.errors import InternalError, InvalidInputError
from src.algebraic import (
    CATALOGUE_OPTIONS,
    DependenceWitness,
    QuadElem,
    VStarMap,
    catalogue_instances,
    catalogue_option,
    certify_relation,
    check_exceptional_catalogue,
    collapses,
    cyclotomic_extension,
    find_dependence,
    find_dependence_escalating,
    fundamental_discriminant,
    galois_split,
    is_fundamental_discriminant,
    quad_in_cyclotomic,
    torsion_bound,
    v_star,
    xi_interval,
    xi_value,
)
from src.lucas import LucasParams, interval_precision


@pytest.mark.parametrize("v,delta,expected", [(6, -1, 3), (5, -1, 10), (8, -1, 8), (5, 1, 5), (2, -1, 1)])
def test_v_star(v, delta, expected):
    assert v_star(v, delta) == expected


def test_v_star_preserves_phi():
    for v in range(1, 60):
        for delta in (-1, 1):
            assert VStarMap.of(v, delta).phi_preserved


def test_v_star_rejects_bad_delta():
    with pytest.raises(InvalidInputError):
        v_star(3, 2)


@pytest.mark.parametrize("n,expected", [(5, 5), (2, 8), (8, 8), (3, 12), (12, 12), (45, 5), (21, 21)])
def test_fundamental_discriminant(n, expected):
    assert fundamental_discriminant(n) == expected
    assert is_fundamental_discriminant(expected)


def test_non_fundamental():
    assert not is_fundamental_discriminant(20)
    assert not is_fundamental_discriminant(9)
    with pytest.raises(InvalidInputError):
        fundamental_discriminant(16)


@pytest.mark.parametrize("d,v,expected", [(5, 5, True), (8, 8, True), (5, 7, False), (12, 24, True), (8, 4, False)])
def test_quad_in_cyclotomic(d, v, expected):
    assert quad_in_cyclotomic(d, v) is expected


def test_quad_in_cyclotomic_needs_fundamental():
    with pytest.raises(InvalidInputError):
        quad_in_cyclotomic(20, 20)


def test_galois_split():
    assert galois_split(5, 5) == ([1, 4], [2, 3])
    assert galois_split(2, 8) == ([1, 7], [3, 5])


@pytest.mark.parametrize(
    "disc,order,c,sqrt_part",
    [
        # zeta_5 + zeta_5^4 = (-1 + sqrt 5)/2
        (5, 5, 4, QuadElem(Fraction(-1, 2), Fraction(1, 2), 5)),
        # zeta_8 + zeta_8^7 = sqrt 2
        (8, 8, 7, QuadElem(0, Fraction(1, 2), 8)),
        # zeta_12 + zeta_12^11 = sqrt 3
        (12, 12, 11, QuadElem(0, Fraction(1, 2), 12)),
    ],
)
def test_extension_contains_sqrt(disc, order, c, sqrt_part):
    ring = cyclotomic_extension(disc, order)
    assert ring.contains_sqrt
    assert ring.degree == len(galois_split(disc, order)[0])
    assert ring.add(ring.zeta(1), ring.zeta(c)) == ring.constant(sqrt_part)


@pytest.mark.parametrize("disc,order", [(5, 5), (5, 20), (12, 12), (8, 24), (21, 84)])
def test_minimal_polynomial_vanishes_on_fixing_coset(disc, order):
    ring = cyclotomic_extension(disc, order)
    fixing, moving = galois_split(disc, order)
    assert ring.degree == len(fixing)
    with mp.workprec(256):
        coeffs = [c.to_mpf(256) for c in reversed(ring.modulus)]
        for c in fixing:
            assert abs(mp.polyval(coeffs, mp.expjpi(mp.mpf(2 * c) / order))) < mp.mpf(10) ** -40
        for c in moving:
            assert abs(mp.polyval(coeffs, mp.expjpi(mp.mpf(2 * c) / order))) > mp.mpf(10) ** -12


def test_extension_without_sqrt():
    ring = cyclotomic_extension(5, 12)
    assert not ring.contains_sqrt
    assert ring.degree == 4
    assert ring.power(ring.zeta(1), 12) == ring.constant(1)
    assert ring.mul(ring.zeta(5), ring.zeta(7)) == ring.constant(1)
    assert ring.zeta(6) == ring.constant(-1)


def test_torsion_bound_and_collapse():
    assert torsion_bound(1) == 12
    assert torsion_bound(5) == 60
    assert collapses(1, 2) and collapses(-1, 4)
    assert not collapses(-1, 1)


def test_xi_interval_encloses_value(fib):
    with interval_precision(128):
        enclosure = xi_interval(fib, 2, 5, 2)
    value = xi_value(fib, 2, 5, 2, 128)
    assert abs(float(enclosure.real.mid) - float(value.real)) < 1e-12
    assert abs(float(enclosure.imag.mid) - float(value.imag)) < 1e-12


def test_xi_for_fibonacci_v1(fib):
    # xi = phi^3
    value = xi_value(fib, 1, 1, 1, 128)
    with mp.workprec(128):
        golden = (1 + mp.sqrt(5)) / 2
        assert abs(value - golden ** 3) < mp.mpf(10) ** -30


def test_xi_for_fibonacci_v2(fib):
    # zeta = -1: xi = (phi - 1)/(phi + 1) = phi^-3
    value = xi_value(fib, 1, 2, 1, 128)
    with mp.workprec(128):
        golden = (1 + mp.sqrt(5)) / 2
        assert abs(value - golden ** -3) < mp.mpf(10) ** -30
    assert abs(float(value.real) - 0.2360679774997897) < 1e-15


def test_xi_is_a_root_of_unity_for_2_plus_sqrt3():
    # (alpha + i)/(alpha - i) with alpha = 2 + sqrt(3)
    value = xi_value(LucasParams(4, -1), 1, 4, 1, 128)
    with mp.workprec(128):
        assert abs(value - mp.expjpi(mp.mpf(1) / 6)) < mp.mpf(10) ** -30
    assert abs(float(value.real) - 0.8660254037844386) < 1e-15
    assert abs(float(value.imag) - 0.5) < 1e-15


@pytest.mark.parametrize(
    "a,b,k,v,j,expected",
    [
        (2, 1, 1, 1, 1, (-1, 1, 1)),
        (4, -1, 1, 4, 1, (0, 12, 12)),
        (4, -1, 1, 6, 1, (0, 12, 12)),
        (1, 1, 1, 1, 1, (-3, 1, 1)),
        (1, 1, 1, 2, 1, (3, 1, 1)),
        (4, 1, 1, 1, 1, (-1, 3, 1)),
        (1, 1, 3, 1, 1, (-1, 1, 1)),
        (3, -1, 1, 1, 1, (0, 1, 1)),
    ],
)
def test_witnesses(a, b, k, v, j, expected):
    witness = find_dependence(LucasParams(a, b), k, v, j, bound=20)
    assert (witness.R, witness.S, witness.torsion_order) == expected


def test_no_witness_outside_catalogue():
    params = LucasParams(3, 1)
    assert catalogue_option(params, 1, 5) is None
    assert find_dependence(params, 1, 5, 1, bound=20) is None
    assert find_dependence_escalating(params, 1, 7, 3, bound=10) is None


def test_certify_relation(fib):
    # phi^-3 xi = 1 at v = 1; zeta_12^1 is the wrong root of unity
    assert certify_relation(fib, 1, 1, 1, -3, 1, 0)
    assert not certify_relation(fib, 1, 1, 1, -3, 1, 1)
    assert not certify_relation(fib, 1, 1, 1, -2, 1, 0)


def test_witness_requires_nonzero_exponents():
    with pytest.raises(InternalError):
        DependenceWitness(0, 0, 1)
    assert DependenceWitness(-3, 1, 1).to_dict()["relation"] == "alpha^(-3) * xi^(1) = 1"


def test_dependence_argument_checks(fib):
    with pytest.raises(InvalidInputError):
        find_dependence(fib, 1, 6, 2)
    with pytest.raises(InvalidInputError):
        find_dependence(fib, 0, 1, 1)


@pytest.mark.parametrize(
    "a,b,k,v,expected",
    [
        (3, 1, 1, 4, "i"),
        (1, 1, 1, 2, "ii"),
        (4, 1, 1, 2, "ii-ext"),
        (1, 1, 3, 4, "i"),
        (3, -1, 1, 2, "iii"),
        (4, -1, 1, 6, "iv"),
        (4, -1, 1, 5, None),
        (-2, 1, 1, 1, "ii"),
    ],
)
def test_catalogue_option(a, b, k, v, expected):
    assert catalogue_option(LucasParams(a, b), k, v) == expected


def test_catalogue_instances_cover_every_option():
    instances = catalogue_instances()
    assert {inst.option for inst in instances} == set(CATALOGUE_OPTIONS)
    for inst in instances:
        assert catalogue_option(inst.params, inst.k, inst.v) == inst.option


@pytest.mark.slow
def test_exceptional_catalogue():
    report = check_exceptional_catalogue()
    assert len(report) == len(catalogue_instances())
    assert all((row["R"], row["S"]) != (0, 0) for row in report)
