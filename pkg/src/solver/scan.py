"""
Theorem scan.
Evaluates the grid of a ScanConfig and streams DivRecords in grid order.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Iterable, Iterator, Optional

from loguru import logger

from src.config import Config
from src.errors import InternalError, TheoremViolation
from src.lucas.params import LucasParams
from src.solver.exponent import (
    min_s_at_n,
    min_s_at_n_detailed,
    min_s_over_n_detailed,
    structural_s,
    verify_klt_bound,
)
from src.solver.records import DivRecord, NMode, RecordStatus, ScanConfig, make_record

Cell = tuple[int, int, int, int]


def _confirm_structural(params: LucasParams, k: int, m: int, allow_n0: bool) -> bool:
    """Check the structural prediction for (k, m); True when one fired."""
    prediction = structural_s(params, k, m)
    if prediction is None:
        return False
    s = min_s_at_n(params, k, m, prediction.n, s_cap=prediction.s, allow_n0=allow_n0)
    if s is None:
        raise InternalError(
            f"{prediction.identity.value} predicts s <= {prediction.s} at n={prediction.n} "
            f"for {params} k={k} m={m}, but no such s exists"
        )
    if prediction.s % s:
        logger.warning(f"Structural s={prediction.s} is not a multiple of s={s} for {params} k={k} m={m}")
    return True


def evaluate_cell(config: ScanConfig, cell: Cell) -> list[DivRecord]:
    """
    All records for one grid cell.

    One record in MIN_OVER_N mode; one per n in [1, 4m] in PER_N mode.
    """
    a, b, k, m = cell
    params = LucasParams(a, b)
    cap = config.cap_for(m)
    fired = _confirm_structural(params, k, m, config.allow_n0)

    if config.n_mode is NMode.MIN_OVER_N:
        result = min_s_over_n_detailed(params, k, m, cap, config.allow_n0)
        if result.status is RecordStatus.CAPPED and not fired and config.certify_capped_by_bound:
            logger.warning(f"Cell {cell} capped at s={cap}; certified by the bound alone")
        return [make_record(params, k, m, result.s, result.n, result.status, cap, fired, config.certify_capped_by_bound)]

    records = []
    for n in range(0 if config.allow_n0 else 1, 4 * m + 1):
        result = min_s_at_n_detailed(params, k, m, n, cap, config.allow_n0)
        records.append(make_record(params, k, m, result.s, n, result.status, cap, fired, config.certify_capped_by_bound))
    return records


def _evaluate(args) -> list[DivRecord]:
    return evaluate_cell(*args)


class ScanSummary:
    """Running totals for a scan; `as_dict()` is the JSON summary."""

    def __init__(self, grid_size: int):
        self.grid_size = grid_size
        self.rows = 0
        self.violations = 0
        self.counts = {status.value: 0 for status in RecordStatus}
        self.structural = 0
        self.max_bound_ratio = 0.0
        self.klt_checked = 0
        self.klt_ok = 0
        self.started = time.monotonic()

    def add(self, record: DivRecord) -> None:
        self.rows += 1
        self.counts[record.status.value] += 1
        if not record.bound_ok:
            self.violations += 1
        if record.structural:
            self.structural += 1
        elif record.s_min is not None:
            ratio = record.m / (record.s_min * record.k) ** 2
            self.max_bound_ratio = max(self.max_bound_ratio, ratio)
            # KLT regime: Fibonacci, k = 1, coprime m and n
            if (record.a, record.b, record.k) == (1, 1, 1) and gcd(record.m, record.n_witness) == 1:
                self.klt_checked += 1
                if verify_klt_bound(record.m, record.s_min):
                    self.klt_ok += 1

    def as_dict(self) -> dict:
        return {
            "grid_size": self.grid_size,
            "rows": self.rows,
            "violations": self.violations,
            "found": self.counts[RecordStatus.FOUND.value],
            "obstructed": self.counts[RecordStatus.OBSTRUCTED.value],
            "capped": self.counts[RecordStatus.CAPPED.value],
            "structural": self.structural,
            "max_bound_ratio": round(self.max_bound_ratio, 6),
            "klt_checked": self.klt_checked,
            "klt_ok": self.klt_ok,
            "wall_seconds": round(time.monotonic() - self.started, 3),
        }


class TheoremScanner:
    """
    Runs a theorem scan over a process pool.

    Workers share only the immutable config; `executor.map` returns results
    in submission order, so the stream is identical for any worker count.
    """

    def __init__(self, config: ScanConfig, workers: int = None, chunksize: int = 16):
        self.config = config
        self.workers = workers or Config.WORKERS
        self.chunksize = chunksize

    def cells(self, after: Optional[Cell] = None) -> list[Cell]:
        """Grid cells, optionally only those after a completed coordinate."""
        cells = self.config.cells()
        if after is None:
            return cells
        try:
            return cells[cells.index(tuple(after)) + 1:]
        except ValueError as e:
            raise InternalError(f"checkpoint coordinate {after} is not a grid cell") from e

    def _results(self, cells: list[Cell]) -> Iterable[list[DivRecord]]:
        jobs = [(self.config, cell) for cell in cells]
        if self.workers <= 1 or len(cells) <= 1:
            return map(_evaluate, jobs)
        executor = ProcessPoolExecutor(max_workers=self.workers)
        return self._drain(executor, executor.map(_evaluate, jobs, chunksize=self.chunksize))

    @staticmethod
    def _drain(executor: ProcessPoolExecutor, results) -> Iterator[list[DivRecord]]:
        try:
            yield from results
        finally:
            executor.shutdown(wait=True, cancel_futures=True)

    def run(self, after: Optional[Cell] = None) -> Iterator[tuple[Cell, list[DivRecord]]]:
        """
        Yield (cell, records) in grid order.

        Raises:
            TheoremViolation: a record has bound_ok = false, including a
                capped record with no structural prediction behind it.
        """
        cells = self.cells(after)
        logger.info(f"Scanning {len(cells)} cells with {self.workers} worker(s)")
        for cell, records in zip(cells, self._results(cells)):
            for record in records:
                if record.bound_ok:
                    continue
                if record.status is RecordStatus.CAPPED:
                    logger.error(f"Cell {cell} hit s_cap with no structural prediction: {record}")
                    raise TheoremViolation(record, f"s search capped without a structural prediction: {record}")
                logger.error(f"Theorem bound violated: {record}")
                raise TheoremViolation(record)
            logger.debug(f"Cell {cell}: {len(records)} record(s)")
            yield cell, records


def verify_theorem(config: ScanConfig, workers: int = None) -> Iterator[DivRecord]:
    """Stream every DivRecord of the grid in deterministic (a, b, k, m) order."""
    scanner = TheoremScanner(config, workers)
    for _, records in scanner.run():
        yield from records
