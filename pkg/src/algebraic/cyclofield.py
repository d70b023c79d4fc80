"""
Quadratic fields inside cyclotomic fields, and exact arithmetic in
Q(sqrt(disc), zeta_T) as polynomials in zeta_T over Q(sqrt(disc)).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from loguru import logger
from mpmath import mp
from sympy import Poly, Rational, Symbol, cyclotomic_poly, expand, sqrt
from sympy.functions.combinatorial.numbers import kronecker_symbol
from sympy.ntheory.factor_ import core

from src.errors import CertificationError, InternalError, InvalidInputError
from src.algebraic.quadratic import QuadElem
from src.numtheory.arithmetic import euler_phi
from src.numtheory.cyclotomic import cyclotomic

_X = Symbol("x")


def v_star(v: int, delta: int) -> int:
    """v if 4 | v or delta = 1; v/2 if v = 2 (mod 4); 2v if v is odd (delta = -1)."""
    if v < 1:
        raise InvalidInputError(f"v must be positive, got {v}")
    if delta not in (-1, 1):
        raise InvalidInputError(f"delta must be -1 or 1, got {delta}")
    if delta == 1 or v % 4 == 0:
        return v
    if v % 2 == 0:
        return v // 2
    return 2 * v


@dataclass(frozen=True)
class VStarMap:
    v: int
    delta: int
    v_star: int

    @classmethod
    def of(cls, v: int, delta: int) -> "VStarMap":
        return cls(v=v, delta=delta, v_star=v_star(v, delta))

    @property
    def phi_preserved(self) -> bool:
        return euler_phi(self.v) == euler_phi(self.v_star)


def fundamental_discriminant(n: int) -> int:
    """Discriminant of the real quadratic field Q(sqrt(n))."""
    if n < 2 or isqrt(n) ** 2 == n:
        raise InvalidInputError(f"n must be a positive non-square, got {n}")
    d0 = int(core(n))
    return d0 if d0 % 4 == 1 else 4 * d0


def is_fundamental_discriminant(d: int) -> bool:
    """Positive fundamental discriminants: squarefree d = 1 (mod 4), or 4m with m = 2, 3 (mod 4) squarefree."""
    if d < 5:
        return False
    if d % 4 == 1:
        return int(core(d)) == d
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and int(core(m)) == m
    return False


def quad_in_cyclotomic(disc_fundamental: int, v: int) -> bool:
    """
    True iff Q(sqrt(disc_fundamental)) lies in the v-th cyclotomic field.

    The conductor of a real quadratic field is its discriminant, so this is
    disc_fundamental | v.
    """
    if not is_fundamental_discriminant(disc_fundamental):
        raise InvalidInputError(f"{disc_fundamental} is not a fundamental discriminant of a real quadratic field")
    if v < 1:
        raise InvalidInputError(f"v must be positive, got {v}")
    return v % disc_fundamental == 0


def units_mod(v: int) -> list[int]:
    return [c for c in range(1, v + 1) if gcd(c, v) == 1] if v > 1 else [1]


def galois_split(disc: int, v: int) -> tuple[list[int], list[int]]:
    """
    Residues c coprime to v split by whether zeta_v -> zeta_v^c fixes sqrt(disc).

    Meaningful when sqrt(disc) lies in the v-th cyclotomic field; the split is
    by the quadratic character of the fundamental discriminant.
    """
    d_k = fundamental_discriminant(disc)
    fixing, moving = [], []
    for c in units_mod(v):
        (fixing if kronecker_symbol(d_k, c) == 1 else moving).append(c)
    return fixing, moving


def _poly_mul(p: list, q: list, zero) -> list:
    out = [zero] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if not x:
            continue
        for j, y in enumerate(q):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


class CyclotomicExtension:
    """
    The field K(zeta_T), K = Q(sqrt(disc)), as K[X] modulo the minimal
    polynomial g of zeta_T = exp(2 pi i / T) over K.

    Elements are tuples of QuadElem coefficients, low degree first. The
    embedding sends sqrt(disc) to the positive root and X to zeta_T.
    """

    def __init__(self, disc: int, order: int):
        if order < 1:
            raise InvalidInputError(f"order must be positive, got {order}")
        self.disc = disc
        self.order = order
        self.zero = QuadElem.rational(0, disc)
        self.one = QuadElem.rational(1, disc)
        self.contains_sqrt = order % fundamental_discriminant(disc) == 0
        self.precision_bits = 64 + 8 * order
        self.modulus = self._minimal_polynomial()
        self.degree = len(self.modulus) - 1

    def _minimal_polynomial(self) -> list[QuadElem]:
        phi_t = [QuadElem.rational(c, self.disc) for c in cyclotomic(self.order).coeffs]
        if not self.contains_sqrt:
            return phi_t
        g = self._factor()
        conjugate = [c.conjugate() for c in g]
        if _poly_mul(g, conjugate, self.zero) != phi_t:
            raise InternalError(f"minimal polynomial of zeta_{self.order} over Q(sqrt({self.disc})) did not verify")
        return g

    def _factor(self) -> list[QuadElem]:
        # Phi_T splits into g * conj(g) over K; g is the factor vanishing at zeta_T
        d0 = int(core(self.disc))
        f = isqrt(self.disc // d0)
        root = sqrt(d0)
        _, factors = Poly(cyclotomic_poly(self.order, _X), _X, extension=root).factor_list()
        if len(factors) != 2:
            raise InternalError(f"Phi_{self.order} has {len(factors)} factors over Q(sqrt({self.disc})), expected 2")

        candidates = []
        for factor, _ in factors:
            coeffs = []
            for c in reversed(factor.monic().all_coeffs()):
                c = expand(c)
                q = Rational(c.coeff(root))
                p = Rational(c.subs(root, 0))
                coeffs.append(QuadElem(Fraction(int(p.p), int(p.q)), Fraction(int(q.p), int(q.q) * f), self.disc))
            candidates.append(coeffs)

        with mp.workprec(self.precision_bits):
            zeta = mp.expjpi(mp.mpf(2) / self.order)
            sizes = [abs(mp.polyval([c.to_mpf(self.precision_bits) for c in reversed(g)], zeta)) for g in candidates]
            small, large = sorted(range(2), key=lambda i: sizes[i])
            if not sizes[small] < mp.mpf(2) ** (-self.precision_bits // 2) < sizes[large]:
                raise CertificationError(f"cannot tell which factor of Phi_{self.order} vanishes at zeta_{self.order}", self.precision_bits)
        logger.debug(f"Factored Phi_{self.order} over Q(sqrt({self.disc}))")
        return candidates[small]

    def reduce(self, coeffs: list[QuadElem]) -> tuple[QuadElem, ...]:
        coeffs = list(coeffs)
        d = self.degree
        for i in range(len(coeffs) - 1, d - 1, -1):
            lead = coeffs[i]
            if not lead:
                continue
            for j in range(d):
                coeffs[i - d + j] = coeffs[i - d + j] - lead * self.modulus[j]
            coeffs[i] = self.zero
        coeffs += [self.zero] * (d - len(coeffs))
        return tuple(coeffs[:d])

    def constant(self, value) -> tuple[QuadElem, ...]:
        if not isinstance(value, QuadElem):
            value = QuadElem.rational(value, self.disc)
        return self.reduce([value])

    def zeta(self, exponent: int) -> tuple[QuadElem, ...]:
        """zeta_T^exponent."""
        exponent %= self.order
        return self.reduce([self.zero] * exponent + [self.one])

    def add(self, x, y) -> tuple[QuadElem, ...]:
        return tuple(p + q for p, q in zip(x, y))

    def sub(self, x, y) -> tuple[QuadElem, ...]:
        return tuple(p - q for p, q in zip(x, y))

    def mul(self, x, y) -> tuple[QuadElem, ...]:
        return self.reduce(_poly_mul(list(x), list(y), self.zero))

    def power(self, x, exponent: int) -> tuple[QuadElem, ...]:
        if exponent < 0:
            raise InvalidInputError("negative powers are not supported")
        result = self.constant(1)
        while exponent:
            if exponent & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            exponent >>= 1
        return result


@lru_cache(maxsize=64)
def cyclotomic_extension(disc: int, order: int) -> CyclotomicExtension:
    return CyclotomicExtension(disc, order)
