"""
Closed-form identities of Lucas sequences, checked exactly.
"""

from enum import Enum

from src.errors import InvalidInputError
from src.lucas.params import LucasParams
from src.lucas.reals import alpha_interval, decide
from src.lucas.sequences import lucas_pair, lucas_u, lucas_u_mod

FIBONACCI = LucasParams(1, 1)
NEAR_MISS_PARAMS = LucasParams(4, -1)


class CommentIdentity(str, Enum):
    """The factorizations behind the structural exponents 1, 2 and 4."""

    DIFF = "DIFF"    # U_{n+k} - U_n = U_{n+k/2} V_{k/2}
    SUM = "SUM"      # U_{n+k} + U_n = U_{n+k/2} V_{k/2}
    SQSUM = "SQSUM"  # U_{n+k}^2 + U_n^2 = U_{2n+k} U_k

    @property
    def exponent(self) -> int:
        return {"DIFF": 1, "SUM": 2, "SQSUM": 4}[self.value]


def comment_identity_applies(params: LucasParams, k: int, which: CommentIdentity) -> bool:
    """Whether the identity's hypotheses on (b, k) hold."""
    if k < 1:
        return False
    if which is CommentIdentity.DIFF:
        return params.b == 1 and k % 4 == 2
    if which is CommentIdentity.SUM:
        return (params.b == 1 and k % 4 == 0) or (params.b == -1 and k % 2 == 0)
    return params.b == 1 and k % 2 == 1


def applicable_identity(params: LucasParams, k: int) -> CommentIdentity | None:
    """The unique identity that applies to (b, k), if any."""
    for which in CommentIdentity:
        if comment_identity_applies(params, k, which):
            return which
    return None


def check_periodicity_identity(params: LucasParams, m: int, n: int) -> bool:
    """
    Exact check of U_{n+4m} - U_n = U_m V_m V_{n+2m}.

    Raises:
        InvalidInputError: m < 2 or n < 0.
    """
    if m < 2:
        raise InvalidInputError(f"m must be >= 2, got {m}")
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    pm = lucas_pair(params, m)
    lhs = lucas_u(params, n + 4 * m) - lucas_u(params, n)
    return lhs == pm.u * pm.v * lucas_pair(params, n + 2 * m).v


def check_periodicity_congruence(params: LucasParams, m: int, n: int) -> bool:
    """U_{n+4m} = U_n (mod U_m), through modular evaluation only."""
    if m < 2:
        raise InvalidInputError(f"m must be >= 2, got {m}")
    modulus = abs(lucas_u(params, m))
    if modulus < 2:
        return True
    return lucas_u_mod(params, n + 4 * m, modulus) == lucas_u_mod(params, n, modulus)


def check_comment_identity(params: LucasParams, k: int, n: int, which: CommentIdentity) -> bool:
    """
    Exact check of one of the three comment identities at (n, k).

    Raises:
        InvalidInputError: The (b, k) hypotheses of `which` do not hold.
    """
    which = CommentIdentity(which)
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    if not comment_identity_applies(params, k, which):
        raise InvalidInputError(f"{which.value} does not apply to b={params.b}, k={k}")

    if which is CommentIdentity.SQSUM:
        lhs = lucas_u(params, n + k) ** 2 + lucas_u(params, n) ** 2
        return lhs == lucas_u(params, 2 * n + k) * lucas_u(params, k)

    half = k // 2
    rhs = lucas_u(params, n + half) * lucas_pair(params, half).v
    if which is CommentIdentity.DIFF:
        return lucas_u(params, n + k) - lucas_u(params, n) == rhs
    return lucas_u(params, n + k) + lucas_u(params, n) == rhs


def _near_miss_parts(n: int) -> tuple[int, int]:
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    divisor = lucas_u(NEAR_MISS_PARAMS, 4 * n + 2)
    diff = lucas_u(NEAR_MISS_PARAMS, n + 1) ** 6 - lucas_u(NEAR_MISS_PARAMS, n) ** 6
    return divisor, diff


def check_near_miss(n: int) -> bool:
    """U_{4n+2} | 4(U_{n+1}^6 - U_n^6) for (a, b) = (4, -1)."""
    divisor, diff = _near_miss_parts(n)
    return (4 * diff) % divisor == 0


def check_near_miss_undoubled(n: int) -> bool:
    """The plain divisibility U_{4n+2} | U_{n+1}^6 - U_n^6, which is not an identity."""
    divisor, diff = _near_miss_parts(n)
    return diff % divisor == 0


def check_fibonacci_identities(n: int) -> bool:
    """F_{n+1} - F_n = F_{n-1}, F_{n+1} + F_n = F_{n+2} and F_{n+1}^2 + F_n^2 = F_{2n+1}."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    f_prev, f, f_next = (lucas_u(FIBONACCI, i) for i in (n - 1, n, n + 1))
    return (
        f_next - f == f_prev
        and f_next + f == lucas_u(FIBONACCI, n + 2)
        and f_next ** 2 + f ** 2 == lucas_u(FIBONACCI, 2 * n + 1)
    )


def check_sandwich_bound(params: LucasParams, n: int, precision_bits: int = None) -> bool:
    """
    alpha^(n-2) <= U_n <= alpha^n, decided with interval arithmetic.

    Args:
        params: Lucas parameters with a >= 1
        n: Index >= 1
    """
    if params.a < 1:
        raise InvalidInputError(f"sandwich bound needs a >= 1, got a={params.a}")
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    u = lucas_u(params, n)

    def predicate():
        alpha = alpha_interval(params)
        lower = alpha ** (n - 2) <= u
        upper = alpha ** n >= u
        if lower is False or upper is False:
            return False
        if lower is None or upper is None:
            return None
        return True

    return decide(predicate, precision_bits, what=f"sandwich bound {params} n={n}")
