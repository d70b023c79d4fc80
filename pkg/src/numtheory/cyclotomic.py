"""
Cyclotomic polynomials and the lemmas built on them.

Polynomials are sympy `Poly` objects over ZZ internally; `CycloPoly` is the
exported value type with integer coefficients, low degree first.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from mpmath import iv
from sympy import Poly, Symbol, divisors, factorint

from src.config import Config
from src.errors import InvalidInputError
from src.lucas.reals import certify_integer, decide, interval_precision, to_interval
from src.numtheory.arithmetic import euler_phi, moebius, tau_star

X = Symbol("X")


@dataclass(frozen=True)
class CycloPoly:
    """Coefficients of Phi_v, low degree first."""

    v: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x):
        """Horner evaluation; exact for ints and Fractions."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def to_poly(self) -> Poly:
        return Poly(list(reversed(self.coeffs)), X, domain="ZZ")


def _power_minus_one(d: int) -> Poly:
    return Poly(X ** d - 1, X, domain="ZZ")


@lru_cache(maxsize=None)
def _divide_down(v: int) -> Poly:
    # X^v - 1 divided by Phi_d for every proper divisor d
    result = _power_minus_one(v)
    for d in divisors(v)[:-1]:
        result = result.exquo(_divide_down(d))
    return result


def _moebius_product(v: int) -> Poly:
    numerator = Poly(1, X, domain="ZZ")
    denominator = Poly(1, X, domain="ZZ")
    for d in divisors(v):
        mu = moebius(v // d)
        if mu == 1:
            numerator = numerator * _power_minus_one(d)
        elif mu == -1:
            denominator = denominator * _power_minus_one(d)
    return numerator.exquo(denominator)


def _to_cyclo(v: int, poly: Poly) -> CycloPoly:
    return CycloPoly(v=v, coeffs=tuple(int(c) for c in reversed(poly.all_coeffs())))


def cyclotomic(v: int, method: str = "divide") -> CycloPoly:
    """
    Exact coefficients of the v-th cyclotomic polynomial.

    Args:
        v: Order, at least 1
        method: "divide" (X^v - 1 over the Phi_d of proper divisors) or
            "moebius" (product of (X^d - 1)^mu(v/d))
    """
    if v < 1:
        raise InvalidInputError(f"v must be >= 1, got {v}")
    if method == "divide":
        return _to_cyclo(v, _divide_down(v))
    if method == "moebius":
        return _to_cyclo(v, _moebius_product(v))
    raise InvalidInputError(f"unknown cyclotomic method '{method}'")


def cyclotomic_at_one(v: int) -> int:
    """Phi_v(1): p when v = p^l, otherwise 1."""
    if v < 2:
        raise InvalidInputError(f"v must be >= 2, got {v}")
    factors = factorint(v)
    if len(factors) == 1:
        return int(next(iter(factors)))
    return 1


def cyclotomic_interval(v: int, alpha):
    """Phi_v(alpha) for real alpha > 1 as a product of (alpha^d - 1)^mu(v/d)."""
    value = iv.mpf(1)
    for d in divisors(v):
        mu = moebius(v // d)
        if mu == 1:
            value = value * (alpha ** d - 1)
        elif mu == -1:
            value = value / (alpha ** d - 1)
    return value


def _check_alpha(v: int, alpha) -> None:
    if v < 2:
        raise InvalidInputError(f"v must be >= 2, got {v}")
    with interval_precision(64):
        if (to_interval(alpha) > 1) is not True:
            raise InvalidInputError(f"alpha must be > 1, got {alpha}")


def check_cyclotomic_lower_bound(v: int, alpha, precision_bits: int = None) -> bool:
    """
    Phi_v(alpha) > (alpha (alpha - 1))^(phi(v)/2), with directed rounding.

    Args:
        v: Order >= 2
        alpha: Real > 1 (int, Fraction, str, mpf or RealQuadApprox)
    """
    _check_alpha(v, alpha)
    phi = euler_phi(v)

    def predicate():
        a = to_interval(alpha)
        return cyclotomic_interval(v, a) > iv.sqrt((a * (a - 1)) ** phi)

    return decide(predicate, precision_bits, what=f"cyclotomic lower bound v={v}")


def check_cyclotomic_tau_bound(v: int, alpha, precision_bits: int = None) -> bool:
    """Phi_v(alpha) > alpha^phi(v) ((alpha - 1)/alpha)^(tau*(v)/2)."""
    _check_alpha(v, alpha)
    phi, tau = euler_phi(v), tau_star(v)

    def predicate():
        a = to_interval(alpha)
        return cyclotomic_interval(v, a) > a ** phi * iv.sqrt(((a - 1) / a) ** tau)

    return decide(predicate, precision_bits, what=f"cyclotomic tau bound v={v}")


def check_trivial_cyclotomic_bound(v: int, alpha, precision_bits: int = None) -> bool:
    """Phi_v(alpha) > (alpha - 1)^phi(v)."""
    _check_alpha(v, alpha)
    phi = euler_phi(v)

    def predicate():
        a = to_interval(alpha)
        return cyclotomic_interval(v, a) > (a - 1) ** phi

    return decide(predicate, precision_bits, what=f"trivial cyclotomic bound v={v}")


def _repunit(m: int) -> Poly:
    # (X^m - 1)/(X - 1)
    return Poly([1] * m, X, domain="ZZ")


def cyclotomic_resultant_unit(m: int, n: int) -> int:
    """
    Resultant of (X^m - 1)/(X - 1) and (X^n - 1)/(X - 1) for coprime m, n.

    Raises:
        InvalidInputError: m or n below 2, or gcd(m, n) != 1.
    """
    if m < 2 or n < 2:
        raise InvalidInputError(f"m and n must be >= 2, got m={m}, n={n}")
    if gcd(m, n) != 1:
        raise InvalidInputError(f"m and n must be coprime, got gcd({m}, {n}) = {gcd(m, n)}")
    return int(_repunit(m).resultant(_repunit(n)))


def poly_gcd_power_minus_one(m: int, n: int) -> tuple[int, ...]:
    """Coefficients (low first) of gcd(X^m - 1, X^n - 1) in Z[X], which is X^gcd(m,n) - 1."""
    if m < 1 or n < 1:
        raise InvalidInputError(f"m and n must be positive, got m={m}, n={n}")
    g = _power_minus_one(m).gcd(_power_minus_one(n))
    return tuple(int(c) for c in reversed(g.all_coeffs()))


def root_of_unity_interval(c: int, order: int):
    """exp(2 pi i c / order) as an `iv` complex interval."""
    theta = 2 * iv.pi * c / order
    return iv.mpc(iv.cos(theta), iv.sin(theta))


def cyclotomic_unit_product(v: int, precision_bits: int = None) -> int:
    """
    prod over k coprime to v of (1 - zeta^k), certified as an integer.

    Equals Phi_v(1), so it is p for v = p^l and 1 otherwise.
    """
    if v < 2:
        raise InvalidInputError(f"v must be >= 2, got {v}")
    bits = precision_bits or Config.PRECISION_BITS
    with interval_precision(bits):
        product = iv.mpc(1, 0)
        for k in range(1, v):
            if gcd(k, v) == 1:
                product = product * (1 - root_of_unity_interval(k, v))
        return certify_integer(product, bits, what=f"unit product v={v}")
