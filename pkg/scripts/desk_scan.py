"""
Desk-scale verification suites.

Runs the full grids that the test suite only samples: identities, the
valuation table against factorization, cyclotomic bounds, the theorem scan,
solver oracle equivalence, the near-miss, dependence witnesses and the norm
identity. Each suite prints one JSON summary line.

Usage:
    python -m scripts.desk_scan [--suite NAME ...] [--workers N]

Options:
    --suite     Run only the named suites (default: all)
    --workers   Worker processes for the theorem scan
"""

import sys
import argparse
import json
import random
import time
from fractions import Fraction
from math import gcd

from loguru import logger

# Add parent dir to path for imports
sys.path.insert(0, ".")

from src.algebraic import (
    catalogue_instances,
    catalogue_option,
    check_norm_identity,
    find_dependence,
    unit_difference_check,
)
from src.algebraic.cyclofield import units_mod
from src.lucas import (
    LucasParams,
    check_fibonacci_identities,
    check_near_miss,
    check_near_miss_undoubled,
    check_periodicity_identity,
    scan_params,
)
from src.numtheory import (
    check_cyclotomic_lower_bound,
    cyclotomic,
    cyclotomic_at_one,
    cyclotomic_resultant_unit,
)
from src.solver import ScanConfig, ScanSummary, min_s_at_n, naive_min_s, structural_s, verify_theorem
from src.valuation import PrimeSet, check_valuation_bound, nu_p_direct, nu_p_of_lucas
from sympy import primerange

# Configure logging
logger.remove()
logger.add(sys.stderr, format="{time:HH:mm:ss} | {level} | {message}", level="INFO")

SEED = 20240601


def suite_fibonacci() -> dict:
    failed = [n for n in range(1, 1001) if not check_fibonacci_identities(n)]
    return {"checked": 1000, "failed": len(failed)}


def suite_periodicity() -> dict:
    checked = failed = 0
    for params in scan_params(-5, 5):
        for m in range(2, 51):
            for n in range(0, 201):
                checked += 1
                if not check_periodicity_identity(params, m, n):
                    failed += 1
                    logger.error(f"Periodicity failed: {params} m={m} n={n}")
    return {"checked": checked, "failed": failed}


def suite_valuation() -> dict:
    mismatches = bound_violations = checked = 0
    primes_13 = PrimeSet.up_to(13)
    for params in scan_params(1, 6):
        for m in range(1, 301):
            for p in primerange(2, 51):
                checked += 1
                if nu_p_of_lucas(params, p, m) != nu_p_direct(params, p, m):
                    mismatches += 1
                    logger.error(f"Valuation mismatch: {params} p={p} m={m}")
            if not check_valuation_bound(params, primes_13, m):
                bound_violations += 1
                logger.error(f"Valuation bound violated: {params} m={m}")
    return {"checked": checked, "mismatches": mismatches, "bound_violations": bound_violations}


def suite_cyclotomic() -> dict:
    rng = random.Random(SEED)
    dichotomy = sum(
        1 for v in range(2, 201)
        if cyclotomic_at_one(v) != cyclotomic(v).evaluate(1)
    )
    alphas = [Fraction(rng.randint(1001, 10000), 1000) for _ in range(20)]
    lower = sum(
        1 for v in range(2, 101) for alpha in alphas
        if not check_cyclotomic_lower_bound(v, alpha)
    )
    resultants = sum(
        1 for m in range(2, 31) for n in range(2, 31)
        if m < n and _coprime(m, n) and abs(cyclotomic_resultant_unit(m, n)) != 1
    )
    units = sum(
        1 for m in range(2, 21) for n in range(2, 21)
        if m < n and _coprime(m, n) and not unit_difference_check(m, n)
    )
    return {"dichotomy_failed": dichotomy, "lower_bound_failed": lower, "resultant_failed": resultants, "unit_failed": units}


def _coprime(m: int, n: int) -> bool:
    return gcd(m, n) == 1


def suite_theorem(workers: int = None) -> dict:
    config = ScanConfig(a_min=1, a_max=6, k_max=3, m_max=500)
    summary = ScanSummary(grid_size=len(config.cells()))
    structural_misses = 0
    for record in verify_theorem(config, workers=workers):
        summary.add(record)
        prediction = structural_s(record.params, record.k, record.m)
        if prediction is not None and (record.s_min is None or record.s_min > prediction.s):
            structural_misses += 1
            logger.error(f"Structural form without small exponent: {record}")
    result = summary.as_dict()
    result["structural_misses"] = structural_misses
    return result


def suite_solver_oracle() -> dict:
    checked = mismatches = 0
    for params in scan_params(1, 6):
        for k in range(1, 4):
            for m in range(2, 41):
                for n in range(1, 4 * m + 1):
                    checked += 1
                    fast = min_s_at_n(params, k, m, n, s_cap=12)
                    if fast != naive_min_s(params, k, m, n, 12):
                        mismatches += 1
                        logger.error(f"Solver mismatch: {params} k={k} m={m} n={n}")
    return {"checked": checked, "mismatches": mismatches}


def suite_near_miss() -> dict:
    failed = [n for n in range(0, 101) if not check_near_miss(n)]
    undoubled = [n for n in range(0, 101) if not check_near_miss_undoubled(n)]
    return {"failed": len(failed), "undoubled_failures": len(undoubled)}


def suite_witnesses() -> dict:
    missing = [inst for inst in catalogue_instances() if find_dependence(inst.params, inst.k, inst.v, inst.j, 20, 256) is None]
    rng = random.Random(SEED)
    sample, spurious = 0, 0
    while sample < 50:
        a, b, k, v = rng.randint(1, 6), rng.choice((-1, 1)), rng.randint(1, 3), rng.randint(1, 12)
        if (a, b, k) == (1, 1, 1) or (a, b) in ((1, -1), (2, -1)):
            continue
        params = LucasParams(a, b)
        if catalogue_option(params, k, v) is not None:
            continue
        j = rng.choice(units_mod(v))
        sample += 1
        if find_dependence(params, k, v, j, 20, 256) is not None:
            spurious += 1
            logger.error(f"Unexpected witness: {params} k={k} v={v} j={j}")
    return {"catalogue_missing": len(missing), "sampled": sample, "spurious": spurious}


def suite_norm() -> dict:
    checked = failed = 0
    for params in scan_params(1, 5):
        for k in (1, 2):
            for v in range(1, 13):
                for j in units_mod(v):
                    checked += 1
                    if not check_norm_identity(params, k, v, j, 256):
                        failed += 1
    return {"checked": checked, "failed": failed}


SUITES = {
    "fibonacci": suite_fibonacci,
    "periodicity": suite_periodicity,
    "valuation": suite_valuation,
    "cyclotomic": suite_cyclotomic,
    "theorem": suite_theorem,
    "solver-oracle": suite_solver_oracle,
    "near-miss": suite_near_miss,
    "witnesses": suite_witnesses,
    "norm": suite_norm,
}


def main():
    parser = argparse.ArgumentParser(description="Run the desk-scale verification suites")
    parser.add_argument("--suite", nargs="+", choices=sorted(SUITES), default=list(SUITES))
    parser.add_argument("--workers", type=int, default=None, help="Worker processes for the theorem scan")
    args = parser.parse_args()

    logger.info("=" * 60)
    logger.info("DESK SCAN")
    logger.info("=" * 60)

    ok = True
    for name in args.suite:
        logger.info(f"Running suite: {name}")
        started = time.monotonic()
        result = SUITES[name](args.workers) if name == "theorem" else SUITES[name]()
        result["seconds"] = round(time.monotonic() - started, 2)
        print(json.dumps({"suite": name, **result}))
        failures = sum(
            v for key, v in result.items()
            if key in ("failed", "mismatches", "bound_violations", "violations", "structural_misses", "catalogue_missing", "spurious")
            or key.endswith("_failed")
        )
        if name == "near-miss" and result["undoubled_failures"] == 0:
            failures += 1
        if failures:
            ok = False
            logger.error(f"Suite {name}: {failures} failure(s)")

    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
