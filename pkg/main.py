"""
lucasdiv - Lucas sequence divisibility toolkit

Usage:
    python main.py seq 1 1 20 [--mod M]                 # (n, U_n, V_n) prefix
    python main.py order 1 1 1 7 --min-over-n           # least s with U_m | U_{n+k}^s - U_n^s
    python main.py verify-theorem --a-max 3 --m-max 50  # theorem scan as CSV
    python main.py witness 4 -1 1 4 1                   # dependence witness
    python main.py valuation 1 1 2 6                    # nu_p(U_m) and f_p
    python main.py spart 1 1 12 --primes 2,3            # S-part of U_m
    python main.py identities 1 1 --n-max 50            # closed-form identities
    python main.py cyclotomic 9 --at 1                  # Phi_v coefficients or value
    python main.py fibonacci --n-max 1000               # Fibonacci anchor identities
    python main.py near-miss --n-max 100                # the (4,-1) near-miss
    python main.py catalogue                            # exceptional dependences
    python main.py norm 1 1 1 5 1                       # norm identity
    python main.py config                               # effective settings

Exit codes: 0 ok, 1 usage, 2 theorem violation, 3 checkpoint mismatch,
4 certification failure.
"""

import argparse
import json
import sys
from fractions import Fraction

from loguru import logger

from src.config import Config
from src.errors import (
    CertificationError,
    CheckpointMismatch,
    InternalError,
    InvalidInputError,
    TheoremViolation,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_CHECKPOINT = 3
EXIT_CERTIFICATION = 4


def configure_logging():
    """stderr at Config.LOG_LEVEL plus a rotating DEBUG file at Config.LOG_FILE."""
    logger.remove()  # Remove default handler
    logger.add(
        sys.stderr,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>",
        level=Config.LOG_LEVEL,
    )
    if Config.LOG_FILE:
        logger.add(
            Config.LOG_FILE,
            rotation="10 MB",
            retention="7 days",
            level="DEBUG",
        )


def emit(line: str):
    """Write one data line to stdout."""
    sys.stdout.write(line + "\n")


def cmd_seq(args) -> int:
    from src.lucas import LucasParams, lucas_prefix
    from src.reports import json_line

    params = LucasParams(args.a, args.b)
    if args.n_max < 0:
        raise InvalidInputError(f"n_max must be nonnegative, got {args.n_max}")
    if args.mod is not None and args.mod < 2:
        raise InvalidInputError(f"modulus must be >= 2, got {args.mod}")

    for pair in lucas_prefix(params, args.n_max):
        values = {"n": pair.index, "u_n": pair.u, "v_n": pair.v}
        if args.mod is not None:
            values.update(u_n=pair.u % args.mod, v_n=pair.v % args.mod, modulus=args.mod)
        emit(json_line("seq", values))
    return EXIT_OK


def cmd_order(args) -> int:
    from src.lucas import LucasParams
    from src.reports import ReportRow
    from src.solver import make_record, min_s_at_n_detailed, min_s_over_n_detailed, structural_s

    params = LucasParams(args.a, args.b)
    cap = args.s_cap if args.s_cap is not None else Config.S_CAP_FACTOR * args.m
    prediction = structural_s(params, args.k, args.m)

    if args.n is not None:
        result = min_s_at_n_detailed(params, args.k, args.m, args.n, cap, args.allow_n0)
        fired = prediction is not None and prediction.n == args.n
        record = make_record(params, args.k, args.m, result.s, args.n, result.status, cap, fired)
    else:
        result = min_s_over_n_detailed(params, args.k, args.m, cap, args.allow_n0)
        record = make_record(params, args.k, args.m, result.s, result.n, result.status, cap, prediction is not None)

    if result.s is None:
        logger.info(f"No exponent for {params} k={args.k} m={args.m}: {result.status.value}")
    emit(ReportRow.from_div_record(record).to_json())
    return EXIT_OK


def cmd_verify_theorem(args) -> int:
    from src.reports import Checkpoint, CsvReportWriter, ReportRow, truncate_report
    from src.solver import NMode, ScanConfig, ScanSummary, TheoremScanner

    config = ScanConfig(
        a_min=args.a_min,
        a_max=args.a_max,
        b_values=tuple(args.b),
        k_max=args.k_max,
        m_max=args.m_max,
        s_cap=args.s_cap,
        n_mode=NMode.PER_N if args.per_n else NMode.MIN_OVER_N,
        certify_capped_by_bound=args.certify_capped_by_bound,
    )
    checkpoint_path = args.resume or args.checkpoint or (f"{args.out}.ckpt" if args.out else None)

    if args.resume:
        if not args.out:
            raise InvalidInputError("--resume needs --out, the report being resumed")
        checkpoint = Checkpoint.load(args.resume)
        checkpoint.verify(config)
        truncate_report(args.out, checkpoint.rows_emitted)
        stream = open(args.out, "a", encoding="utf-8", newline="")
        writer = CsvReportWriter(stream, header=False)
        logger.info(f"Resuming after {checkpoint.last_completed} ({checkpoint.rows_emitted} rows)")
    else:
        checkpoint = Checkpoint.start(config)
        stream = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
        writer = CsvReportWriter(stream)

    resumed_rows = checkpoint.rows_emitted
    summary = ScanSummary(grid_size=len(config.cells()))
    scanner = TheoremScanner(config, workers=args.workers)
    pending = 0

    def save():
        writer.flush()
        if checkpoint_path:
            checkpoint.save(checkpoint_path)

    try:
        for cell, records in scanner.run(after=checkpoint.last_completed):
            for record in records:
                writer.write(record)
                summary.add(record)
            checkpoint = checkpoint.advance(cell, len(records))
            pending += len(records)
            if pending >= Config.CHECKPOINT_EVERY:
                save()
                logger.info(f"{checkpoint.rows_emitted} rows written, last cell {cell}")
                pending = 0
        save()
    except TheoremViolation as e:
        save()
        sys.stderr.write(ReportRow.from_div_record(e.record).to_json() + "\n")
        raise
    except KeyboardInterrupt:
        save()
        logger.warning(f"Interrupted; checkpoint at {checkpoint.last_completed}")
        raise
    finally:
        if stream is not sys.stdout:
            stream.close()

    result = summary.as_dict()
    result["resumed_rows"] = resumed_rows
    logger.info(f"Scan complete: {result}")
    # with CSV on stdout the summary goes to stderr
    (sys.stdout if args.out else sys.stderr).write(json.dumps(result) + "\n")
    return EXIT_OK


def cmd_witness(args) -> int:
    from src.algebraic import find_dependence_escalating
    from src.lucas import LucasParams
    from src.reports import json_line

    params = LucasParams(args.a, args.b)
    witness = find_dependence_escalating(params, args.k, args.v, args.j, args.bound, args.precision)
    if witness is None:
        emit("null")
    else:
        emit(json_line("witness", {"a": args.a, "b": args.b, "k": args.k, "v": args.v, "j": args.j, **witness.to_dict()}))
    return EXIT_OK


def cmd_valuation(args) -> int:
    from src.lucas import LucasParams
    from src.reports import json_line
    from src.valuation import valuation_report

    params = LucasParams(args.a, args.b)
    report = valuation_report(params, args.p, args.m)
    emit(json_line("valuation", {
        "a": args.a,
        "b": args.b,
        "p": report.p,
        "m": report.m,
        "nu": report.nu_table,
        "nu_direct": report.nu_direct,
        "f_p": report.f_p,
    }))
    return EXIT_OK


def cmd_spart(args) -> int:
    from src.lucas import LucasParams
    from src.reports import json_line
    from src.valuation import PrimeSet, appearance_lcm, check_valuation_bound, s_part

    params = LucasParams(args.a, args.b)
    primes = PrimeSet.parse(args.primes)
    values = {
        "a": args.a,
        "b": args.b,
        "m": args.m,
        "primes": ",".join(str(p) for p in primes),
        "spart": s_part(params, primes, args.m),
        "lcm": appearance_lcm(params, primes),
    }
    if params.a >= 1:
        values["bound_ok"] = check_valuation_bound(params, primes, args.m)
    emit(json_line("spart", values))
    return EXIT_OK


def cmd_identities(args) -> int:
    from src.algebraic import check_gamma_representation
    from src.lucas import CommentIdentity, LucasParams, check_comment_identity, check_periodicity_identity, comment_identity_applies
    from src.reports import json_line

    params = LucasParams(args.a, args.b)
    counts = {"periodicity": [0, 0], "comment": [0, 0], "gamma": [0, 0]}

    def tally(name: str, ok: bool):
        counts[name][0] += 1
        if not ok:
            counts[name][1] += 1
            logger.error(f"{name} identity failed for {params}")

    for n in range(args.n_max + 1):
        for m in range(2, args.m_max + 1):
            tally("periodicity", check_periodicity_identity(params, m, n))
        for k in range(1, args.k_max + 1):
            for which in CommentIdentity:
                if comment_identity_applies(params, k, which):
                    tally("comment", check_comment_identity(params, k, n, which))
        if n >= 1:
            tally("gamma", check_gamma_representation(params, n))

    values = {"a": args.a, "b": args.b}
    for name, (checked, failed) in counts.items():
        values[f"{name}_checked"] = checked
        values[f"{name}_failed"] = failed
    emit(json_line("identities", values))
    return EXIT_OK


def cmd_cyclotomic(args) -> int:
    from src.numtheory import cyclotomic
    from src.reports import json_line

    poly = cyclotomic(args.v)
    if args.at is None:
        emit(json_line("cyclotomic", {"v": args.v, "degree": poly.degree, "coeffs": list(poly.coeffs)}))
        return EXIT_OK
    try:
        x = Fraction(args.at)
    except ValueError as e:
        raise InvalidInputError(f"--at must be an integer or fraction, got '{args.at}'") from e
    value = poly.evaluate(x)
    value = int(value) if value.denominator == 1 else str(value)
    emit(json_line("cyclotomic", {"v": args.v, "at": str(x), "value": value}))
    return EXIT_OK


def cmd_fibonacci(args) -> int:
    from src.lucas import check_fibonacci_identities
    from src.reports import json_line

    failed = [n for n in range(1, args.n_max + 1) if not check_fibonacci_identities(n)]
    emit(json_line("fibonacci", {"checked": max(args.n_max, 0), "failed": failed}))
    return EXIT_OK


def cmd_near_miss(args) -> int:
    from src.lucas import check_near_miss, check_near_miss_undoubled
    from src.reports import json_line

    indices = range(args.n_max + 1)
    emit(json_line("near-miss", {
        "checked": len(indices),
        "failed": [n for n in indices if not check_near_miss(n)],
        "undoubled_failures": [n for n in indices if not check_near_miss_undoubled(n)],
    }))
    return EXIT_OK


def cmd_catalogue(args) -> int:
    from src.algebraic import check_exceptional_catalogue
    from src.reports import json_line

    for entry in check_exceptional_catalogue(args.bound, args.precision):
        emit(json_line("catalogue", entry))
    return EXIT_OK


def cmd_norm(args) -> int:
    from src.algebraic import norm_identity_report
    from src.lucas import LucasParams
    from src.reports import json_line

    params = LucasParams(args.a, args.b)
    report = norm_identity_report(params, args.k, args.v, args.j, args.precision)
    emit(json_line("norm", {"a": args.a, "b": args.b, "k": args.k, "j": args.j, **report.to_dict()}))
    return EXIT_OK


def cmd_config(args) -> int:
    emit(json.dumps(Config.as_dict()))
    return EXIT_OK


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that exits with EXIT_USAGE on bad arguments."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_params(parser: argparse.ArgumentParser):
    parser.add_argument("a", type=int, help="recurrence coefficient a")
    parser.add_argument("b", type=int, help="recurrence coefficient b, -1 or 1")


def build_parser() -> CliParser:
    parser = CliParser(prog="lucasdiv", description="Lucas sequence divisibility toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="sequence prefix (n, U_n, V_n)")
    _add_params(p)
    p.add_argument("n_max", type=int)
    p.add_argument("--mod", type=int, default=None, help="reduce modulo M")
    p.set_defaults(handler=cmd_seq)

    p = sub.add_parser("order", help="least s with U_m | U_{n+k}^s - U_n^s")
    _add_params(p)
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--n", type=int, default=None, help="fixed start index")
    mode.add_argument("--min-over-n", action="store_true", help="minimize over n in [1, 4m] (default)")
    p.add_argument("--s-cap", type=int, default=None)
    p.add_argument("--allow-n0", action="store_true")
    p.set_defaults(handler=cmd_order)

    p = sub.add_parser("verify-theorem", help="scan m < 20000 (sk)^2 over a grid")
    p.add_argument("--a-min", type=int, default=1)
    p.add_argument("--a-max", type=int, default=3)
    p.add_argument("--b", type=int, nargs="+", default=[-1, 1])
    p.add_argument("--k-max", type=int, default=1)
    p.add_argument("--m-max", type=int, default=50)
    p.add_argument("--s-cap", type=int, default=None)
    p.add_argument("--per-n", action="store_true", help="one row per n instead of the minimum over n")
    p.add_argument(
        "--certify-capped-by-bound",
        action="store_true",
        help="accept capped cells with m < 20000 ((s_cap+1)k)^2 instead of aborting",
    )
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default=None, help="CSV report file (default stdout)")
    p.add_argument("--checkpoint", default=None, help="checkpoint file (default OUT.ckpt)")
    p.add_argument("--resume", default=None, help="resume from this checkpoint")
    p.set_defaults(handler=cmd_verify_theorem)

    p = sub.add_parser("witness", help="multiplicative dependence witness")
    _add_params(p)
    for name in ("k", "v", "j"):
        p.add_argument(name, type=int)
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--precision", type=int, default=None)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("valuation", help="nu_p(U_m) from the valuation table")
    _add_params(p)
    p.add_argument("p", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(handler=cmd_valuation)

    p = sub.add_parser("spart", help="S-part of U_m")
    _add_params(p)
    p.add_argument("m", type=int)
    p.add_argument("--primes", required=True, help="comma-separated primes, e.g. 2,3")
    p.set_defaults(handler=cmd_spart)

    p = sub.add_parser("identities", help="periodicity, comment and gamma identities")
    _add_params(p)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--m-max", type=int, default=10)
    p.set_defaults(handler=cmd_identities)

    p = sub.add_parser("cyclotomic", help="Phi_v coefficients or value")
    p.add_argument("v", type=int)
    p.add_argument("--at", default=None, help="evaluate at an integer or fraction")
    p.set_defaults(handler=cmd_cyclotomic)

    p = sub.add_parser("fibonacci", help="Fibonacci anchor identities")
    p.add_argument("--n-max", type=int, default=1000)
    p.set_defaults(handler=cmd_fibonacci)

    p = sub.add_parser("near-miss", help="U_{4n+2} | 4(U_{n+1}^6 - U_n^6) for (4,-1)")
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(handler=cmd_near_miss)

    p = sub.add_parser("catalogue", help="certify the exceptional dependences")
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--precision", type=int, default=None)
    p.set_defaults(handler=cmd_catalogue)

    p = sub.add_parser("norm", help="norm identity for alpha^k - zeta")
    _add_params(p)
    for name in ("k", "v", "j"):
        p.add_argument(name, type=int)
    p.add_argument("--precision", type=int, default=None)
    p.set_defaults(handler=cmd_norm)

    p = sub.add_parser("config", help="print the effective configuration")
    p.set_defaults(handler=cmd_config)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging()

    errors = Config.validate()
    if errors:
        for e in errors:
            logger.error(f"Configuration: {e}")
        return EXIT_USAGE

    try:
        return args.handler(args)
    except InvalidInputError as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE
    except TheoremViolation as e:
        logger.error(f"Theorem violation: {e}")
        return EXIT_VIOLATION
    except CheckpointMismatch as e:
        logger.error(f"Checkpoint mismatch: {e}")
        return EXIT_CHECKPOINT
    except CertificationError as e:
        logger.error(f"Certification failed: {e}")
        return EXIT_CERTIFICATION
    except InternalError as e:
        logger.error(f"Internal check failed: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
