"""
Multiplicative dependence of alpha and xi = (alpha^k - delta conj(zeta)) / (alpha^k - zeta).

Candidates are found numerically and certified by exact arithmetic in
Q(sqrt(delta), zeta_T); a witness is only ever returned after certification.
"""

from dataclasses import dataclass
from math import gcd, lcm
from typing import Optional

from loguru import logger
from mpmath import iv, mp, mpf

from src.config import Config
from src.errors import CertificationError, InternalError, InvalidInputError
from src.algebraic.cyclofield import cyclotomic_extension
from src.algebraic.quadratic import canonical_alpha
from src.lucas.params import LucasParams
from src.numtheory.cyclotomic import root_of_unity_interval


@dataclass(frozen=True)
class DependenceWitness:
    """alpha^R xi^S = 1, obtained from a relation with a root of unity of order torsion_order."""

    R: int
    S: int
    torsion_order: int

    def __post_init__(self):
        if (self.R, self.S) == (0, 0):
            raise InternalError("a dependence witness needs (R, S) != (0, 0)")

    def relation(self) -> str:
        return f"alpha^({self.R}) * xi^({self.S}) = 1"

    def to_dict(self) -> dict:
        return {"R": self.R, "S": self.S, "torsion": self.torsion_order, "relation": self.relation()}


def _check_args(k: int, v: int, j: int) -> None:
    if k < 1:
        raise InvalidInputError(f"k must be positive, got {k}")
    if v < 1:
        raise InvalidInputError(f"v must be positive, got {v}")
    if gcd(j, v) != 1:
        raise InvalidInputError(f"j must be coprime to v, got j={j}, v={v}")


def torsion_bound(v: int) -> int:
    """Every root of unity in Q(alpha, zeta_v) considered here has order dividing this."""
    return lcm(2 * v, Config.WITNESS_TORSION_BASE)


def collapses(delta: int, v: int) -> bool:
    """zeta^2 = delta, so delta conj(zeta) = zeta and xi = 1."""
    return (delta == 1 and v in (1, 2)) or (delta == -1 and v == 4)


def xi_value(params: LucasParams, k: int, v: int, j: int, precision_bits: int = None):
    """
    xi for zeta = exp(2 pi i j / v) as an mpc rounded to precision_bits.

    Use `xi_interval` for a certified enclosure.
    """
    _check_args(k, v, j)
    bits = precision_bits or Config.PRECISION_BITS
    delta = params.q_power(k)
    with mp.workprec(bits + 16):
        alpha = (params.abs_a + mp.sqrt(params.delta)) / 2
        alpha_k = alpha ** k
        zeta = mp.expjpi(mpf(2 * j) / v)
        xi = (alpha_k - delta * mp.conj(zeta)) / (alpha_k - zeta)
    with mp.workprec(bits):
        return +xi


def xi_interval(params: LucasParams, k: int, v: int, j: int):
    """Enclosure of xi at the current `iv` precision."""
    _check_args(k, v, j)
    delta = params.q_power(k)
    alpha_k = canonical_alpha(params).to_interval() ** k
    zeta = root_of_unity_interval(j, v)
    zeta_bar = iv.mpc(zeta.real, -zeta.imag)
    numerator = alpha_k - delta * zeta_bar
    denominator = alpha_k - zeta
    # n / d = n conj(d) / |d|^2
    scaled = numerator * iv.mpc(denominator.real, -denominator.imag)
    size = denominator.real ** 2 + denominator.imag ** 2
    return iv.mpc(scaled.real / size, scaled.imag / size)


def certify_relation(params: LucasParams, k: int, v: int, j: int, R: int, S: int, e: int) -> bool:
    """
    Exact test of alpha^R xi^S = zeta_T^e with T = torsion_bound(v).

    Cleared of denominators: alpha^max(R,0) N^S = zeta_T^e alpha^max(-R,0) D^S
    with N = alpha^k - delta zeta^-1 and D = alpha^k - zeta.
    """
    _check_args(k, v, j)
    order = torsion_bound(v)
    ring = cyclotomic_extension(params.delta, order)
    alpha = canonical_alpha(params)
    alpha_k = ring.constant(alpha ** k)
    delta = params.q_power(k)
    step = (j % v) * (order // v)
    zeta = ring.zeta(step)
    zeta_bar = ring.zeta(-step)

    numerator = ring.sub(alpha_k, ring.mul(ring.constant(delta), zeta_bar))
    denominator = ring.sub(alpha_k, zeta)
    left = ring.mul(ring.constant(alpha ** max(R, 0)), ring.power(numerator, S))
    right = ring.mul(ring.zeta(e), ring.mul(ring.constant(alpha ** max(-R, 0)), ring.power(denominator, S)))
    return left == right


def _candidates(params: LucasParams, k: int, v: int, j: int, bound: int, bits: int) -> list[tuple[int, int, int]]:
    # (R, S, e) with |alpha^R xi^S - zeta_T^e| below 2^(-bits/2)
    order = torsion_bound(v)
    found = []
    with mp.workprec(bits + 32):
        xi = xi_value(params, k, v, j, bits + 32)
        alpha = (params.abs_a + mp.sqrt(params.delta)) / 2
        ratio = mp.log(abs(xi)) / mp.log(alpha)
        tolerance = mpf(2) ** (-(bits // 2))
        for S in range(1, bound + 1):
            R = int(mp.nint(-S * ratio))
            if abs(R) > bound:
                continue
            z = alpha ** R * xi ** S
            if abs(abs(z) - 1) > tolerance:
                continue
            e = int(mp.nint(mp.arg(z) * order / (2 * mp.pi))) % order
            if abs(z - mp.expjpi(mpf(2 * e) / order)) > tolerance:
                continue
            found.append((R, S, e))
    return sorted(found, key=lambda c: (abs(c[0]) + c[1], c[1]))


def find_dependence(
    params: LucasParams, k: int, v: int, j: int, bound: int = 20, precision_bits: int = None
) -> Optional[DependenceWitness]:
    """
    Bounded search for alpha^R xi^S equal to a root of unity.

    Args:
        params: Lucas parameters (only |a| matters)
        k, v, j: xi is built from alpha^k and zeta = exp(2 pi i j / v)
        bound: |R|, |S| <= bound
        precision_bits: Numeric detection precision

    Returns:
        The certified witness with least |R| + |S|, or None.

    Raises:
        CertificationError: a numeric candidate failed exact certification;
            retry with more precision.
    """
    _check_args(k, v, j)
    if bound < 1:
        raise InvalidInputError(f"bound must be positive, got {bound}")
    bits = precision_bits or Config.PRECISION_BITS
    if collapses(params.q_power(k), v):
        return DependenceWitness(R=0, S=1, torsion_order=1)

    order = torsion_bound(v)
    for R, S, e in _candidates(params, k, v, j, bound, bits):
        logger.debug(f"Candidate alpha^{R} xi^{S} = zeta_{order}^{e} for {params} k={k} v={v} j={j}")
        if not certify_relation(params, k, v, j, R, S, e):
            raise CertificationError(
                f"alpha^{R} xi^{S} is within 2^-{bits // 2} of zeta_{order}^{e} but not equal, {params} k={k} v={v} j={j}",
                bits,
            )
        t = order // gcd(e, order)
        return DependenceWitness(R=R * t, S=S * t, torsion_order=t)
    return None


def find_dependence_escalating(
    params: LucasParams, k: int, v: int, j: int, bound: int = 20, precision_bits: int = None
) -> Optional[DependenceWitness]:
    """find_dependence, doubling precision on CertificationError up to Config.MAX_PRECISION_BITS."""
    bits = precision_bits or Config.PRECISION_BITS
    while True:
        try:
            return find_dependence(params, k, v, j, bound, bits)
        except CertificationError as e:
            if bits * 2 > Config.MAX_PRECISION_BITS:
                raise CertificationError(f"no certified answer for {params} k={k} v={v} j={j}", bits) from e
            logger.debug(f"{e}; retrying at {bits * 2} bits")
            bits *= 2


@dataclass(frozen=True)
class CatalogueInstance:
    option: str
    a: int
    b: int
    k: int
    v: int
    j: int

    @property
    def params(self) -> LucasParams:
        return LucasParams(self.a, self.b)


# ii-ext: alpha^k = 2 + sqrt(5), the trace-4 unit of norm -1
CATALOGUE_OPTIONS = {
    "i": "(-b)^k = -1, v = 4",
    "ii": "(a,b,k) in {(1,1,1), (2,1,1)}, v in {1,2}",
    "ii-ext": "alpha^k = 2 + sqrt(5), v in {1,2}",
    "iii": "(-b)^k = 1, v in {1,2}",
    "iv": "(a,b,k) = (4,-1,1), v in {4,6}",
}


def catalogue_option(params: LucasParams, k: int, v: int) -> Optional[str]:
    """The exceptional option (a, b, k, v) falls under, or None."""
    delta = params.q_power(k)
    triple = (params.abs_a, params.b, k)
    if delta == -1 and v == 4:
        return "i"
    if triple in ((1, 1, 1), (2, 1, 1)) and v in (1, 2):
        return "ii"
    if triple in ((4, 1, 1), (1, 1, 3)) and v in (1, 2):
        return "ii-ext"
    if delta == 1 and v in (1, 2):
        return "iii"
    if triple == (4, -1, 1) and v in (4, 6):
        return "iv"
    return None


def catalogue_instances() -> list[CatalogueInstance]:
    """Representative tuples for every option."""
    return [
        CatalogueInstance("i", 3, 1, 1, 4, 1),
        CatalogueInstance("i", 1, 1, 3, 4, 3),
        CatalogueInstance("i", 5, 1, 1, 4, 3),
        CatalogueInstance("ii", 1, 1, 1, 1, 1),
        CatalogueInstance("ii", 1, 1, 1, 2, 1),
        CatalogueInstance("ii", 2, 1, 1, 1, 1),
        CatalogueInstance("ii", 2, 1, 1, 2, 1),
        CatalogueInstance("ii-ext", 4, 1, 1, 1, 1),
        CatalogueInstance("ii-ext", 4, 1, 1, 2, 1),
        CatalogueInstance("ii-ext", 1, 1, 3, 1, 1),
        CatalogueInstance("iii", 1, 1, 2, 1, 1),
        CatalogueInstance("iii", 3, -1, 1, 1, 1),
        CatalogueInstance("iii", 3, -1, 1, 2, 1),
        CatalogueInstance("iii", 2, 1, 2, 2, 1),
        CatalogueInstance("iv", 4, -1, 1, 4, 1),
        CatalogueInstance("iv", 4, -1, 1, 4, 3),
        CatalogueInstance("iv", 4, -1, 1, 6, 1),
        CatalogueInstance("iv", 4, -1, 1, 6, 5),
    ]


def check_exceptional_catalogue(bound: int = 20, precision_bits: int = None) -> list[dict]:
    """
    Certify a witness for every catalogue instance.

    Raises:
        InternalError: an instance has no witness within the bound.
    """
    report = []
    for inst in catalogue_instances():
        witness = find_dependence_escalating(inst.params, inst.k, inst.v, inst.j, bound, precision_bits)
        if witness is None:
            raise InternalError(f"option ({inst.option}) instance {inst} has no witness within bound {bound}")
        logger.debug(f"Option ({inst.option}) {inst}: {witness.relation()}")
        report.append({"option": inst.option, "a": inst.a, "b": inst.b, "k": inst.k, "v": inst.v, "j": inst.j, **witness.to_dict()})
    logger.info(f"Catalogue: {len(report)} instances certified")
    return report
