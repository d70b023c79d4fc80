"""
Minimal exponents for U_m | U_{n+k}^s - U_n^s.

All searches work with residues modulo U_m and running powers; no modular
inverse is needed, so gcd(U_n, U_m) > 1 is handled exactly.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional

from src.config import Config
from src.errors import InvalidInputError
from src.lucas.identities import CommentIdentity, applicable_identity
from src.lucas.params import LucasParams
from src.lucas.sequences import lucas_u, lucas_u_mod
from src.solver.records import RecordStatus


@dataclass(frozen=True)
class ExponentResult:
    status: RecordStatus
    s: Optional[int] = None
    n: Optional[int] = None


@dataclass(frozen=True)
class StructuralPrediction:
    s: int
    n: int
    identity: CommentIdentity


def _modulus(params: LucasParams, m: int) -> int:
    if m < 2:
        raise InvalidInputError(f"m must be >= 2, got {m}")
    return abs(lucas_u(params, m))


def _default_cap(m: int, s_cap: Optional[int]) -> int:
    cap = Config.S_CAP_FACTOR * m if s_cap is None else s_cap
    if cap < 1:
        raise InvalidInputError(f"s_cap must be positive, got {cap}")
    return cap


def obstructed(t: int, w: int, modulus: int) -> bool:
    """
    True when no s >= 1 gives t^s = w^s (mod modulus).

    An exponent exists iff every prime of the modulus divides both t and w
    or neither of them.
    """
    e = modulus.bit_length()
    g_t, g_w = gcd(t, modulus), gcd(w, modulus)
    # rad(g_t) | w  <=>  w^e = 0 (mod g_t), since every exponent in g_t is < e
    return pow(w, e, g_t) != 0 or pow(t, e, g_w) != 0


def _search(t: int, w: int, modulus: int, cap: int) -> ExponentResult:
    if t == w:
        return ExponentResult(RecordStatus.FOUND, 1)
    if obstructed(t, w, modulus):
        return ExponentResult(RecordStatus.OBSTRUCTED)
    tp, wp = t, w
    for s in range(2, cap + 1):
        tp = tp * t % modulus
        wp = wp * w % modulus
        if tp == wp:
            return ExponentResult(RecordStatus.FOUND, s)
    return ExponentResult(RecordStatus.CAPPED)


def min_s_at_n_detailed(
    params: LucasParams, k: int, m: int, n: int, s_cap: int = None, allow_n0: bool = False
) -> ExponentResult:
    """Least s in [1, s_cap] at a fixed n, with the reason when there is none."""
    if k < 1:
        raise InvalidInputError(f"k must be positive, got {k}")
    if n < (0 if allow_n0 else 1):
        raise InvalidInputError(f"n must be >= {0 if allow_n0 else 1}, got {n}")
    modulus = _modulus(params, m)
    cap = _default_cap(m, s_cap)
    if modulus == 1:
        return ExponentResult(RecordStatus.FOUND, 1, n)
    t = lucas_u_mod(params, n + k, modulus)
    w = lucas_u_mod(params, n, modulus)
    result = _search(t, w, modulus, cap)
    return ExponentResult(result.status, result.s, n)


def min_s_at_n(params: LucasParams, k: int, m: int, n: int, s_cap: int = None, allow_n0: bool = False) -> Optional[int]:
    """
    Least s in [1, s_cap] with U_m | U_{n+k}^s - U_n^s, or None.

    Args:
        params: Lucas parameters
        k: Shift, at least 1
        m: Modulus index, at least 2
        n: Start index, at least 1 (0 with allow_n0)
        s_cap: Largest s tried; defaults to Config.S_CAP_FACTOR * m
    """
    return min_s_at_n_detailed(params, k, m, n, s_cap, allow_n0).s


def _residues(params: LucasParams, count: int, modulus: int) -> list[int]:
    # U_0 .. U_{count-1} mod modulus
    values = [0, 1 % modulus]
    while len(values) < count:
        values.append((params.a * values[-1] + params.b * values[-2]) % modulus)
    return values[:count]


def min_s_over_n_detailed(
    params: LucasParams, k: int, m: int, s_cap: int = None, allow_n0: bool = False
) -> ExponentResult:
    """
    Smallest s over n in [1, 4m] and the least n achieving it.

    The range covers a full period of U_n modulo U_m. Status is FOUND when
    some n admits s <= s_cap, OBSTRUCTED when every n is obstructed, and
    CAPPED otherwise.
    """
    if k < 1:
        raise InvalidInputError(f"k must be positive, got {k}")
    modulus = _modulus(params, m)
    cap = _default_cap(m, s_cap)
    first_n = 0 if allow_n0 else 1
    if modulus == 1:
        return ExponentResult(RecordStatus.FOUND, 1, first_n)

    residues = _residues(params, 4 * m + k + 1, modulus)
    best: Optional[ExponentResult] = None
    any_capped = False
    for n in range(first_n, 4 * m + 1):
        limit = cap if best is None else best.s - 1
        if limit < 1:
            break
        result = _search(residues[n + k], residues[n], modulus, limit)
        if result.status is RecordStatus.FOUND:
            best = ExponentResult(RecordStatus.FOUND, result.s, n)
        elif result.status is RecordStatus.CAPPED and best is None:
            any_capped = True

    if best is not None:
        return best
    return ExponentResult(RecordStatus.CAPPED if any_capped else RecordStatus.OBSTRUCTED)


def min_s_over_n(params: LucasParams, k: int, m: int, s_cap: int = None, allow_n0: bool = False) -> Optional[tuple[int, int]]:
    """(s_min, n_witness) minimizing over n in [1, 4m], or None."""
    result = min_s_over_n_detailed(params, k, m, s_cap, allow_n0)
    if result.status is not RecordStatus.FOUND:
        return None
    return result.s, result.n


def structural_s(params: LucasParams, k: int, m: int) -> Optional[StructuralPrediction]:
    """
    The exponent forced by the comment identities, when m has the matching form.

    m = n + k/2 (k even) uses the difference or sum identity; m = 2n + k
    (k odd, b = 1) uses the sum of squares. n must be at least 1.
    """
    identity = applicable_identity(params, k)
    if identity is None:
        return None
    if identity is CommentIdentity.SQSUM:
        if (m - k) % 2:
            return None
        n = (m - k) // 2
    else:
        n = m - k // 2
    if n < 1:
        return None
    return StructuralPrediction(s=identity.exponent, n=n, identity=identity)


def verify_klt_bound(m: int, s: int) -> bool:
    """
    m < 500 s^2, the Fibonacci k = 1 bound for s outside {1, 2, 4}.

    Raises:
        InvalidInputError: s in {1, 2, 4}.
    """
    if s in Config.STRUCTURAL_EXPONENTS:
        raise InvalidInputError(f"the bound m < 500 s^2 excludes s in {{1, 2, 4}}, got s={s}")
    if m < 1 or s < 1:
        raise InvalidInputError(f"m and s must be positive, got m={m}, s={s}")
    return m < Config.KLT_CONSTANT * s * s


def ratio_order(params: LucasParams, n: int, m: int, cap: int = None) -> Optional[int]:
    """
    Multiplicative order of U_{n+1}/U_n modulo U_m.

    Raises:
        InvalidInputError: gcd(U_n, U_m) != 1.
    """
    modulus = _modulus(params, m)
    cap = _default_cap(m, cap)
    if modulus == 1:
        return 1
    w = lucas_u_mod(params, n, modulus)
    if gcd(w, modulus) != 1:
        raise InvalidInputError(f"U_{n} is not invertible modulo U_{m}")
    ratio = lucas_u_mod(params, n + 1, modulus) * pow(w, -1, modulus) % modulus
    power = ratio
    for s in range(1, cap + 1):
        if power == 1:
            return s
        power = power * ratio % modulus
    return None


def naive_min_s(params: LucasParams, k: int, m: int, n: int, s_max: int) -> Optional[int]:
    """Least s <= s_max by full-integer divisibility (test oracle)."""
    modulus = lucas_u(params, m)
    top, bottom = lucas_u(params, n + k), lucas_u(params, n)
    for s in range(1, s_max + 1):
        if (top ** s - bottom ** s) % modulus == 0:
            return s
    return None
