"""
Scan checkpoints.

A checkpoint names the last fully written grid cell and the number of rows
written up to it, keyed by the config hash.
"""

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from loguru import logger

from src.config import Config
from src.errors import CheckpointMismatch, InvalidInputError
from src.solver.records import ScanConfig

Cell = tuple[int, int, int, int]


@dataclass(frozen=True)
class Checkpoint:
    config_hash: str
    last_completed: Optional[Cell]
    rows_emitted: int
    config: dict
    schema_version: str = Config.SCHEMA_VERSION

    @classmethod
    def start(cls, config: ScanConfig) -> "Checkpoint":
        return cls(config_hash=config.config_hash(), last_completed=None, rows_emitted=0, config=config.to_dict())

    def advance(self, cell: Cell, rows: int) -> "Checkpoint":
        return Checkpoint(
            config_hash=self.config_hash,
            last_completed=tuple(cell),
            rows_emitted=self.rows_emitted + rows,
            config=self.config,
            schema_version=self.schema_version,
        )

    def verify(self, config: ScanConfig) -> None:
        """
        Raises:
            CheckpointMismatch: the checkpoint was written for another config.
        """
        current = config.config_hash()
        if current != self.config_hash:
            raise CheckpointMismatch(
                f"checkpoint was written for config {self.config_hash[:12]}, "
                f"current config is {current[:12]} ({config.to_dict()})"
            )

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "config_hash": self.config_hash,
            "last_completed": list(self.last_completed) if self.last_completed else None,
            "rows_emitted": self.rows_emitted,
            "config": self.config,
        }

    def save(self, path: str | Path) -> None:
        """Write atomically (temp file, then rename)."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n", encoding="utf-8")
        os.replace(tmp, path)
        logger.debug(f"Checkpoint saved: {self.last_completed} after {self.rows_emitted} rows")

    @classmethod
    def load(cls, path: str | Path) -> "Checkpoint":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise InvalidInputError(f"cannot read checkpoint {path}: {e}") from e
        last = data.get("last_completed")
        return cls(
            config_hash=data["config_hash"],
            last_completed=tuple(last) if last else None,
            rows_emitted=data["rows_emitted"],
            config=data["config"],
            schema_version=data.get("schema_version", Config.SCHEMA_VERSION),
        )


def truncate_report(path: str | Path, rows: int) -> None:
    """Keep the CSV header and the first `rows` rows, dropping anything written after the checkpoint."""
    path = Path(path)
    if not path.exists():
        raise InvalidInputError(f"cannot resume: report {path} does not exist")
    lines = path.read_text(encoding="utf-8").splitlines(keepends=True)
    if len(lines) < rows + 1:
        raise CheckpointMismatch(f"report {path} has {max(len(lines) - 1, 0)} rows, checkpoint expects {rows}")
    path.write_text("".join(lines[: rows + 1]), encoding="utf-8")
