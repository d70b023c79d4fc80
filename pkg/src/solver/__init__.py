"""
Order solver.
Minimal exponents for U_m | U_{n+k}^s - U_n^s and the theorem scan.
"""

from src.solver.records import (
    NMode,
    RecordStatus,
    DivRecord,
    ScanConfig,
    make_record,
    theorem_bound_holds,
)
from src.solver.exponent import (
    ExponentResult,
    StructuralPrediction,
    obstructed,
    min_s_at_n,
    min_s_at_n_detailed,
    min_s_over_n,
    min_s_over_n_detailed,
    structural_s,
    verify_klt_bound,
    ratio_order,
    naive_min_s,
)
from src.solver.scan import ScanSummary, TheoremScanner, evaluate_cell, verify_theorem

__all__ = [
    "NMode",
    "RecordStatus",
    "DivRecord",
    "ScanConfig",
    "make_record",
    "theorem_bound_holds",
    "ExponentResult",
    "StructuralPrediction",
    "obstructed",
    "min_s_at_n",
    "min_s_at_n_detailed",
    "min_s_over_n",
    "min_s_over_n_detailed",
    "structural_s",
    "verify_klt_bound",
    "ratio_order",
    "naive_min_s",
    "ScanSummary",
    "TheoremScanner",
    "evaluate_cell",
    "verify_theorem",
]
