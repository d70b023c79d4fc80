"""
Scan records and scan configuration.
"""

import hashlib
import json
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Optional

from src.config import Config
from src.errors import InvalidInputError
from src.lucas.params import LucasParams, scan_params


class NMode(str, Enum):
    PER_N = "PER_N"
    MIN_OVER_N = "MIN_OVER_N"


class RecordStatus(str, Enum):
    FOUND = "found"            # an exponent s <= s_cap was found
    OBSTRUCTED = "obstructed"  # provably no exponent exists
    CAPPED = "capped"          # search stopped at s_cap


def theorem_bound_holds(m: int, s: int, k: int) -> bool:
    """m < 20000 (s k)^2."""
    return m < Config.THEOREM_CONSTANT * (s * k) ** 2


@dataclass(frozen=True)
class DivRecord:
    """One row of a theorem scan."""

    a: int
    b: int
    k: int
    m: int
    n_witness: Optional[int]
    s_min: Optional[int]
    structural: bool
    bound_ok: bool
    status: RecordStatus = RecordStatus.FOUND

    @property
    def coordinate(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.k, self.m)

    @property
    def params(self) -> LucasParams:
        return LucasParams(self.a, self.b)


def make_record(
    params: LucasParams,
    k: int,
    m: int,
    s_min: Optional[int],
    n_witness: Optional[int],
    status: RecordStatus,
    s_cap: int,
    structural_fired: bool = False,
    certify_capped_by_bound: bool = False,
) -> DivRecord:
    """
    Build a DivRecord and derive structural / bound_ok.

    An obstructed cell has no exponent, so the bound holds vacuously. A capped
    cell is certified only when a structural identity fired; with
    `certify_capped_by_bound` it is also certified when every exponent above
    the cap already satisfies the bound.
    """
    structural = s_min in Config.STRUCTURAL_EXPONENTS
    if status is RecordStatus.FOUND:
        bound_ok = structural or theorem_bound_holds(m, s_min, k)
    elif status is RecordStatus.OBSTRUCTED:
        bound_ok = True
    else:
        bound_ok = structural_fired or (certify_capped_by_bound and theorem_bound_holds(m, s_cap + 1, k))
    return DivRecord(
        a=params.a,
        b=params.b,
        k=k,
        m=m,
        n_witness=n_witness,
        s_min=s_min,
        structural=structural,
        bound_ok=bound_ok,
        status=status,
    )


@dataclass(frozen=True)
class ScanConfig:
    """
    Grid for a theorem scan.

    `s_cap = None` means the default cap Config.S_CAP_FACTOR * m per cell.
    `m_parity` restricts m to odd (1) or even (0) values.
    `certify_capped_by_bound` accepts capped cells that the bound alone
    covers; by default such a cell aborts the scan.
    """

    a_min: int
    a_max: int
    b_values: tuple[int, ...] = (-1, 1)
    k_max: int = 1
    m_max: int = 100
    s_cap: Optional[int] = None
    n_mode: NMode = NMode.MIN_OVER_N
    m_min: int = 2
    m_parity: Optional[int] = None
    allow_n0: bool = False
    certify_capped_by_bound: bool = False
    schema_version: str = field(default=Config.SCHEMA_VERSION)

    def __post_init__(self):
        if self.s_cap is not None and self.s_cap < 4:
            raise InvalidInputError(f"s_cap must be >= 4, got {self.s_cap}")
        if self.m_min < 2:
            raise InvalidInputError(f"m_min must be >= 2, got {self.m_min}")
        if self.k_max < 1:
            raise InvalidInputError(f"k_max must be >= 1, got {self.k_max}")
        if not set(self.b_values) <= {-1, 1} or not self.b_values:
            raise InvalidInputError(f"b_values must be a non-empty subset of {{-1, 1}}, got {self.b_values}")
        if self.m_parity not in (None, 0, 1):
            raise InvalidInputError(f"m_parity must be 0, 1 or None, got {self.m_parity}")
        object.__setattr__(self, "b_values", tuple(sorted(set(self.b_values))))
        object.__setattr__(self, "n_mode", NMode(self.n_mode))

    def cap_for(self, m: int) -> int:
        return self.s_cap if self.s_cap is not None else Config.S_CAP_FACTOR * m

    def params(self) -> list[LucasParams]:
        """Non-degenerate params of the grid, in (a, b) order."""
        return scan_params(self.a_min, self.a_max, self.b_values)

    def m_values(self) -> list[int]:
        return [
            m
            for m in range(self.m_min, self.m_max + 1)
            if self.m_parity is None or m % 2 == self.m_parity
        ]

    def cells(self) -> list[tuple[int, int, int, int]]:
        """Grid coordinates (a, b, k, m) in emission order."""
        m_values = self.m_values()
        return [
            (p.a, p.b, k, m)
            for p in self.params()
            for k in range(1, self.k_max + 1)
            for m in m_values
        ]

    def to_dict(self) -> dict:
        data = asdict(self)
        data["n_mode"] = self.n_mode.value
        data["b_values"] = list(self.b_values)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "ScanConfig":
        data = dict(data)
        data["b_values"] = tuple(data["b_values"])
        return cls(**data)

    def config_hash(self) -> str:
        """sha256 over the canonical JSON form of the config."""
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
