# Lucas sequence core
from .params import LucasParams, DEGENERATE_PAIRS, is_valid_pair, scan_params
from .reals import RealQuadApprox, alpha_approx, alpha_interval, decide, interval_precision, to_interval
from .sequences import (
    LucasPair,
    lucas_pair,
    lucas_u,
    lucas_v,
    lucas_u_mod,
    lucas_v_mod,
    lucas_prefix,
    naive_lucas_u,
    naive_lucas_v,
)
from .identities import (
    FIBONACCI,
    NEAR_MISS_PARAMS,
    CommentIdentity,
    applicable_identity,
    comment_identity_applies,
    check_periodicity_identity,
    check_periodicity_congruence,
    check_comment_identity,
    check_near_miss,
    check_near_miss_undoubled,
    check_fibonacci_identities,
    check_sandwich_bound,
)

__all__ = [
    "LucasParams",
    "DEGENERATE_PAIRS",
    "is_valid_pair",
    "scan_params",
    "RealQuadApprox",
    "alpha_approx",
    "alpha_interval",
    "decide",
    "interval_precision",
    "to_interval",
    "LucasPair",
    "lucas_pair",
    "lucas_u",
    "lucas_v",
    "lucas_u_mod",
    "lucas_v_mod",
    "lucas_prefix",
    "naive_lucas_u",
    "naive_lucas_v",
    "FIBONACCI",
    "NEAR_MISS_PARAMS",
    "CommentIdentity",
    "applicable_identity",
    "comment_identity_applies",
    "check_periodicity_identity",
    "check_periodicity_congruence",
    "check_comment_identity",
    "check_near_miss",
    "check_near_miss_undoubled",
    "check_fibonacci_identities",
    "check_sandwich_bound",
]
