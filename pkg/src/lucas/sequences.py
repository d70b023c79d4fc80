"""
Exact and modular evaluation of the Lucas pair (U_n, V_n).
"""

from dataclasses import dataclass

from src.errors import InternalError, InvalidInputError
from src.lucas.params import LucasParams


@dataclass(frozen=True)
class LucasPair:
    """The values U_n and V_n at one index."""

    u: int
    v: int
    index: int


def _check_pair(params: LucasParams, pair: LucasPair) -> LucasPair:
    # delta U_n^2 + 4(-b)^n = V_n^2
    if params.delta * pair.u * pair.u + 4 * params.q_power(pair.index) != pair.v * pair.v:
        raise InternalError(f"pair identity failed for {params} at n={pair.index}")
    return pair


def lucas_pair(params: LucasParams, n: int) -> LucasPair:
    """
    Compute (U_n, V_n) by doubling.

    Uses U_2n = U_n V_n, V_2n = V_n^2 - 2(-b)^n and the half-sum step
    U_{n+1} = (a U_n + V_n)/2, V_{n+1} = (delta U_n + a V_n)/2.

    Args:
        params: Lucas parameters
        n: Nonnegative index

    Returns:
        Checked LucasPair.
    """
    if n < 0:
        raise InvalidInputError(f"index must be nonnegative, got {n}")
    a, delta = params.a, params.delta
    u, v, q = 0, 2, 1  # U_0, V_0, (-b)^0
    for bit in bin(n)[2:]:
        u, v, q = u * v, v * v - 2 * q, 1
        if bit == "1":
            u, v = (a * u + v) // 2, (delta * u + a * v) // 2
            q = -params.b
    return _check_pair(params, LucasPair(u=u, v=v, index=n))


def lucas_u(params: LucasParams, n: int) -> int:
    """U_n in O(log n) multiplications."""
    return lucas_pair(params, n).u


def lucas_v(params: LucasParams, n: int) -> int:
    """V_n in O(log n) multiplications."""
    return lucas_pair(params, n).v


def _u_pair_mod(params: LucasParams, n: int, modulus: int) -> tuple[int, int]:
    # (U_n, U_{n+1}) mod modulus; no division needed
    a, b = params.a, params.b
    u0, u1 = 0, 1 % modulus
    for bit in bin(n)[2:]:
        u0, u1 = u0 * (2 * u1 - a * u0) % modulus, (u1 * u1 + b * u0 * u0) % modulus
        if bit == "1":
            u0, u1 = u1, (a * u1 + b * u0) % modulus
    return u0, u1


def lucas_u_mod(params: LucasParams, n: int, modulus: int) -> int:
    """
    U_n mod modulus without materializing U_n.

    Raises:
        InvalidInputError: modulus < 2 or n < 0.
    """
    if modulus < 2:
        raise InvalidInputError(f"modulus must be >= 2, got {modulus}")
    if n < 0:
        raise InvalidInputError(f"index must be nonnegative, got {n}")
    return _u_pair_mod(params, n, modulus)[0]


def lucas_v_mod(params: LucasParams, n: int, modulus: int) -> int:
    """V_n mod modulus, via V_n = 2U_{n+1} - a U_n."""
    if modulus < 2:
        raise InvalidInputError(f"modulus must be >= 2, got {modulus}")
    if n < 0:
        raise InvalidInputError(f"index must be nonnegative, got {n}")
    u0, u1 = _u_pair_mod(params, n, modulus)
    return (2 * u1 - params.a * u0) % modulus


def naive_lucas_u(params: LucasParams, n: int) -> int:
    """U_n by iterating the recurrence (test oracle)."""
    prev, cur = 0, 1
    for _ in range(n):
        prev, cur = cur, params.a * cur + params.b * prev
    return prev


def naive_lucas_v(params: LucasParams, n: int) -> int:
    """V_n by iterating the recurrence (test oracle)."""
    prev, cur = 2, params.a
    for _ in range(n):
        prev, cur = cur, params.a * cur + params.b * prev
    return prev


def lucas_prefix(params: LucasParams, n_max: int) -> list[LucasPair]:
    """Checked pairs for n = 0..n_max by iteration."""
    if n_max < 0:
        raise InvalidInputError(f"n_max must be nonnegative, got {n_max}")
    pairs = []
    u_prev, u_cur = 0, 1
    v_prev, v_cur = 2, params.a
    for n in range(n_max + 1):
        pairs.append(_check_pair(params, LucasPair(u=u_prev, v=v_prev, index=n)))
        u_prev, u_cur = u_cur, params.a * u_cur + params.b * u_prev
        v_prev, v_cur = v_cur, params.a * v_cur + params.b * v_prev
    return pairs
