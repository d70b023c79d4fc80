"""
Configuration management.
Loads settings from environment variables.
"""

import os
import sys
from dotenv import load_dotenv

# Load .env file
load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        return -1


class Config:
    """Application configuration from environment variables."""

    # Real arithmetic
    PRECISION_BITS: int = _int_env("LUCASDIV_PRECISION", 128)
    MAX_PRECISION_BITS: int = _int_env("LUCASDIV_MAX_PRECISION", 4096)

    # Scan orchestration
    WORKERS: int = _int_env("LUCASDIV_WORKERS", os.cpu_count() or 1)
    CHECKPOINT_EVERY: int = _int_env("LUCASDIV_CHECKPOINT_EVERY", 1000)
    S_CAP_FACTOR: int = _int_env("LUCASDIV_S_CAP_FACTOR", 4)  # s_cap = factor * m

    # Logging
    LOG_FILE: str = os.getenv("LUCASDIV_LOG_FILE", "logs/lucasdiv.log")
    LOG_LEVEL: str = os.getenv("LUCASDIV_LOG_LEVEL", "INFO").upper()

    # Report schema
    SCHEMA_VERSION: str = "1"

    # Bounds
    THEOREM_CONSTANT: int = 20000   # m < 20000 (sk)^2
    KLT_CONSTANT: int = 500         # m < 500 s^2, Fibonacci k = 1
    STRUCTURAL_EXPONENTS = (1, 2, 4)
    WITNESS_TORSION_BASE: int = 12  # torsion orders divide lcm(2v, 12)

    @classmethod
    def validate(cls) -> list[str]:
        """
        Validate that config values are usable.
        Returns list of missing/invalid config keys.
        """
        errors = []

        if cls.PRECISION_BITS < 16:
            errors.append(f"LUCASDIV_PRECISION must be an integer >= 16, got {cls.PRECISION_BITS}")
        if cls.MAX_PRECISION_BITS < cls.PRECISION_BITS:
            errors.append(
                f"LUCASDIV_MAX_PRECISION ({cls.MAX_PRECISION_BITS}) is below LUCASDIV_PRECISION ({cls.PRECISION_BITS})"
            )
        if cls.WORKERS < 1:
            errors.append(f"LUCASDIV_WORKERS must be a positive integer, got {cls.WORKERS}")
        if cls.CHECKPOINT_EVERY < 1:
            errors.append(f"LUCASDIV_CHECKPOINT_EVERY must be a positive integer, got {cls.CHECKPOINT_EVERY}")
        if cls.S_CAP_FACTOR < 1:
            errors.append(f"LUCASDIV_S_CAP_FACTOR must be a positive integer, got {cls.S_CAP_FACTOR}")
        if cls.LOG_LEVEL not in ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"):
            errors.append(f"LUCASDIV_LOG_LEVEL is not a loguru level: '{cls.LOG_LEVEL}'")

        return errors

    @classmethod
    def as_dict(cls) -> dict:
        """Settings snapshot, used by `main.py config`."""
        return {
            "precision_bits": cls.PRECISION_BITS,
            "max_precision_bits": cls.MAX_PRECISION_BITS,
            "workers": cls.WORKERS,
            "checkpoint_every": cls.CHECKPOINT_EVERY,
            "s_cap_factor": cls.S_CAP_FACTOR,
            "log_file": cls.LOG_FILE,
            "log_level": cls.LOG_LEVEL,
            "schema_version": cls.SCHEMA_VERSION,
        }


# Validate on import (will print warnings but not crash)
_config_errors = Config.validate()
if _config_errors:
    print("Configuration warnings:", file=sys.stderr)
    for error in _config_errors:
        print(f"  - {error}", file=sys.stderr)
