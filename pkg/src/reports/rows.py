"""
Report rows: one flat record per result, written as CSV or JSON lines.

Fields that can hold arbitrarily large integers are always written as
decimal strings.
"""

import csv
import json
from dataclasses import dataclass, field
from typing import Any, TextIO

from src.config import Config
from src.errors import InvalidInputError
from src.solver.records import DivRecord, RecordStatus

CSV_HEADER = ("a", "b", "k", "m", "s_min", "n_witness", "structural", "bound_ok")

# decimal-string fields
BIG_FIELDS = frozenset({"u_n", "v_n", "modulus", "spart", "lcm", "value", "rhs"})


def _encode(key: str, value: Any) -> Any:
    if key in BIG_FIELDS and isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return value


def _decode(key: str, value: Any) -> Any:
    if key in BIG_FIELDS and isinstance(value, str) and value.lstrip("-").isdigit():
        return int(value)
    return value


@dataclass(frozen=True)
class ReportRow:
    """A flat record of kind "div", "valuation", "witness", "seq", ..."""

    kind: str
    values: dict = field(default_factory=dict)
    schema_version: str = Config.SCHEMA_VERSION

    @classmethod
    def from_div_record(cls, record: DivRecord) -> "ReportRow":
        return cls(
            kind="div",
            values={
                "a": record.a,
                "b": record.b,
                "k": record.k,
                "m": record.m,
                "s_min": record.s_min,
                "n_witness": record.n_witness,
                "structural": record.structural,
                "bound_ok": record.bound_ok,
                "status": record.status.value,
            },
        )

    def to_div_record(self) -> DivRecord:
        if self.kind != "div":
            raise InvalidInputError(f"row of kind '{self.kind}' is not a scan record")
        v = self.values
        return DivRecord(
            a=v["a"],
            b=v["b"],
            k=v["k"],
            m=v["m"],
            n_witness=v["n_witness"],
            s_min=v["s_min"],
            structural=v["structural"],
            bound_ok=v["bound_ok"],
            status=RecordStatus(v.get("status", RecordStatus.FOUND.value)),
        )

    def to_json(self) -> str:
        data = {"schema_version": self.schema_version, "kind": self.kind}
        data.update((key, _encode(key, value)) for key, value in self.values.items())
        return json.dumps(data, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "ReportRow":
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"not a JSON report row: {line!r}") from e
        version = data.pop("schema_version", None)
        if version != Config.SCHEMA_VERSION:
            raise InvalidInputError(f"unsupported schema_version {version!r}, expected {Config.SCHEMA_VERSION!r}")
        kind = data.pop("kind")
        return cls(kind=kind, values={key: _decode(key, value) for key, value in data.items()}, schema_version=version)

    def to_csv_fields(self) -> list[str]:
        """The CSV_HEADER columns of a "div" row."""
        record = self.to_div_record()
        return [
            str(record.a),
            str(record.b),
            str(record.k),
            str(record.m),
            "" if record.s_min is None else str(record.s_min),
            "" if record.n_witness is None else str(record.n_witness),
            "true" if record.structural else "false",
            "true" if record.bound_ok else "false",
        ]

    @classmethod
    def from_csv_fields(cls, fields: list[str]) -> "ReportRow":
        if len(fields) != len(CSV_HEADER):
            raise InvalidInputError(f"expected {len(CSV_HEADER)} CSV fields, got {len(fields)}")
        a, b, k, m, s_min, n_witness, structural, bound_ok = fields
        s = int(s_min) if s_min else None
        return cls(
            kind="div",
            values={
                "a": int(a),
                "b": int(b),
                "k": int(k),
                "m": int(m),
                "s_min": s,
                "n_witness": int(n_witness) if n_witness else None,
                "structural": structural == "true",
                "bound_ok": bound_ok == "true",
                # CSV has no status column; an empty s_min reads back as capped
                "status": (RecordStatus.FOUND if s is not None else RecordStatus.CAPPED).value,
            },
        )


class CsvReportWriter:
    """Writes "div" rows as CSV with CSV_HEADER."""

    def __init__(self, stream: TextIO, header: bool = True):
        self.stream = stream
        self.writer = csv.writer(stream, lineterminator="\n")
        self.rows = 0
        if header:
            self.writer.writerow(CSV_HEADER)

    def write(self, record: DivRecord) -> None:
        self.writer.writerow(ReportRow.from_div_record(record).to_csv_fields())
        self.rows += 1

    def flush(self) -> None:
        self.stream.flush()


def read_csv_report(stream: TextIO) -> list[ReportRow]:
    """Parse a CSV report written by CsvReportWriter."""
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None:
        return []
    if tuple(header) != CSV_HEADER:
        raise InvalidInputError(f"unexpected CSV header {header}")
    return [ReportRow.from_csv_fields(row) for row in reader]


def write_csv_report(stream: TextIO, rows: list[ReportRow]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.to_csv_fields())


def json_line(kind: str, values: dict) -> str:
    """Shorthand for a one-off JSON report line."""
    return ReportRow(kind=kind, values=dict(values)).to_json()
