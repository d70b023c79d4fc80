"""
Norms from Q(alpha, zeta_v) down to Q.
"""

from dataclasses import asdict, dataclass
from math import gcd

from loguru import logger
from mpmath import iv, mp, mpf

from src.config import Config
from src.errors import InternalError, InvalidInputError
from src.algebraic.cyclofield import (
    fundamental_discriminant,
    galois_split,
    quad_in_cyclotomic,
    units_mod,
    v_star,
)
from src.algebraic.quadratic import canonical_alpha
from src.lucas.params import LucasParams
from src.lucas.reals import certify_integer, interval_precision
from src.numtheory.arithmetic import euler_phi
from src.numtheory.cyclotomic import cyclotomic, root_of_unity_interval


@dataclass(frozen=True)
class NormIdentityReport:
    """
    Both sides of the norm identity for alpha_1 = alpha^k and zeta = exp(2 pi i j / v).

    `lhs` is |N(alpha_1 - zeta)| and `lhs_twisted` is |N(alpha_1 - delta conj(zeta))|.
    `rhs` is alpha_1^-phi(v) Phi_v(alpha_1) Phi_{v*}(alpha_1), an integer.
    """

    v: int
    v_star: int
    delta: int
    alpha_in_cyclotomic: bool
    degree_over_cyclotomic: int
    lhs: mpf
    lhs_twisted: mpf
    rhs: int
    holds: bool
    single_norm_holds: bool

    def to_dict(self) -> dict:
        data = asdict(self)
        data["lhs"] = mp.nstr(self.lhs, 30)
        data["lhs_twisted"] = mp.nstr(self.lhs_twisted, 30)
        data["rhs"] = str(self.rhs)
        return data


def _exact_rhs(params: LucasParams, k: int, v: int, vs: int) -> int:
    alpha_k = canonical_alpha(params) ** k
    value = alpha_k ** (-euler_phi(v)) * cyclotomic(v).evaluate(alpha_k) * cyclotomic(vs).evaluate(alpha_k)
    if not value.is_rational or value.x.denominator != 1:
        raise InternalError(f"alpha_1^-phi(v) Phi_v Phi_v* is not an integer for {params} k={k} v={v}: {value}")
    return abs(int(value.x))


def _close(x: mpf, y: mpf, bits: int) -> bool:
    return abs(x - y) <= mpf(2) ** (8 - bits) * abs(y)


def norm_identity_report(params: LucasParams, k: int, v: int, j: int, precision_bits: int = None) -> NormIdentityReport:
    """
    Evaluate the norm identity over every embedding of Q(alpha_1, zeta).

    When alpha lies outside Q(zeta_v) the embeddings pair each conjugate
    zeta^c with both alpha_1 and beta_1. Otherwise zeta -> zeta^c sends
    alpha_1 to alpha_1 or beta_1 by the quadratic character, and the identity
    is checked for the product |N(alpha_1 - zeta)| |N(alpha_1 - delta conj(zeta))|.
    """
    if k < 1 or v < 1:
        raise InvalidInputError(f"k and v must be positive, got k={k}, v={v}")
    if gcd(j, v) != 1:
        raise InvalidInputError(f"j must be coprime to v, got j={j}, v={v}")
    bits = precision_bits or Config.PRECISION_BITS
    delta = params.q_power(k)
    vs = v_star(v, delta)
    inside = quad_in_cyclotomic(fundamental_discriminant(params.delta), v)
    rhs = _exact_rhs(params, k, v, vs)

    with mp.workprec(bits + 32):
        alpha_1 = (params.abs_a + mp.sqrt(params.delta)) / 2
        alpha_1 = alpha_1 ** k
        beta_1 = delta / alpha_1
        if inside:
            fixing, moving = galois_split(params.delta, v)
            embeddings = [(alpha_1, c) for c in fixing] + [(beta_1, c) for c in moving]
        else:
            embeddings = [(conj, c) for c in units_mod(v) for conj in (alpha_1, beta_1)]
        lhs, twisted = mpf(1), mpf(1)
        for image, c in embeddings:
            zeta = mp.expjpi(mpf(2 * j * c) / v)
            lhs *= abs(image - zeta)
            twisted *= abs(image - delta * mp.conj(zeta))
        if inside:
            holds = _close(lhs * twisted, mpf(rhs), bits)
            single = _close(lhs, mp.sqrt(rhs), bits)
        else:
            holds = single = _close(lhs, mpf(rhs), bits)

    return NormIdentityReport(
        v=v,
        v_star=vs,
        delta=delta,
        alpha_in_cyclotomic=inside,
        degree_over_cyclotomic=1 if inside else 2,
        lhs=lhs,
        lhs_twisted=twisted,
        rhs=rhs,
        holds=holds,
        single_norm_holds=single,
    )


def check_norm_identity(params: LucasParams, k: int, v: int, j: int, precision_bits: int = None) -> bool:
    """True iff the norm identity holds to relative tolerance 2^(8 - precision_bits)."""
    report = norm_identity_report(params, k, v, j, precision_bits)
    if not report.holds:
        logger.warning(f"Norm identity failed for {params} k={k} v={v} j={j}: {report.lhs} vs {report.rhs}")
    return report.holds


def unit_difference_check(ord1: int, ord2: int, precision_bits: int = None) -> bool:
    """
    True iff prod |zeta' - xi'| over primitive roots of coprime orders is 1.

    Raises:
        InvalidInputError: an order below 2, or gcd(ord1, ord2) != 1.
        CertificationError: the product could not be pinned to an integer.
    """
    if ord1 < 2 or ord2 < 2:
        raise InvalidInputError(f"orders must be >= 2, got {ord1} and {ord2}")
    if gcd(ord1, ord2) != 1:
        raise InvalidInputError(f"orders must be coprime, got gcd({ord1}, {ord2}) = {gcd(ord1, ord2)}")
    bits = precision_bits or Config.PRECISION_BITS
    with interval_precision(bits):
        product = iv.mpf(1)
        for c1 in units_mod(ord1):
            z1 = root_of_unity_interval(c1, ord1)
            for c2 in units_mod(ord2):
                product = product * abs(z1 - root_of_unity_interval(c2, ord2))
        return certify_integer(iv.mpc(product, 0), bits, what=f"unit norm ({ord1}, {ord2})") == 1
