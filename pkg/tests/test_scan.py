"""
Tests for scan configuration and the theorem scanner.
"""

import pytest

from src.config import Config
from src.errors import InvalidInputError, TheoremViolation
from src.solver import (
    ExponentResult,
    NMode,
    RecordStatus,
    ScanConfig,
    ScanSummary,
    TheoremScanner,
    evaluate_cell,
    verify_theorem,
)


def small_config(**overrides) -> ScanConfig:
    values = dict(a_min=1, a_max=3, k_max=2, m_max=12)
    values.update(overrides)
    return ScanConfig(**values)


def test_config_validation():
    with pytest.raises(InvalidInputError):
        small_config(s_cap=3)
    with pytest.raises(InvalidInputError):
        small_config(m_min=1)
    with pytest.raises(InvalidInputError):
        small_config(b_values=(0,))
    with pytest.raises(InvalidInputError):
        small_config(k_max=0)


def test_cells_in_grid_order():
    cells = small_config(k_max=1, m_max=3).cells()
    assert cells == [
        (1, 1, 1, 2), (1, 1, 1, 3),
        (2, 1, 1, 2), (2, 1, 1, 3),
        (3, -1, 1, 2), (3, -1, 1, 3),
        (3, 1, 1, 2), (3, 1, 1, 3),
    ]


def test_m_max_below_two_gives_empty_grid():
    config = small_config(m_max=1)
    assert config.cells() == []
    assert list(verify_theorem(config, workers=1)) == []


def test_m_parity():
    assert small_config(m_parity=1).m_values() == [3, 5, 7, 9, 11]


def test_config_hash():
    config = small_config()
    assert config.config_hash() == small_config().config_hash()
    assert config.config_hash() != small_config(m_max=13).config_hash()
    assert ScanConfig.from_dict(config.to_dict()) == config


def test_default_cap():
    assert small_config().cap_for(10) == Config.S_CAP_FACTOR * 10
    assert small_config(s_cap=9).cap_for(10) == 9


def test_scan_bound_holds():
    records = list(verify_theorem(small_config(), workers=1))
    assert len(records) == len(small_config().cells())
    assert all(r.bound_ok for r in records)
    assert [r.coordinate for r in records] == small_config().cells()


@pytest.mark.slow
def test_scan_independent_of_worker_count():
    config = small_config(a_max=4, m_max=15)
    assert list(verify_theorem(config, workers=1)) == list(verify_theorem(config, workers=2))


def test_per_n_mode_rows():
    config = small_config(n_mode=NMode.PER_N, a_max=1, k_max=1, m_max=4)
    records = evaluate_cell(config, (1, 1, 1, 4))
    assert [r.n_witness for r in records] == list(range(1, 17))
    assert len(list(verify_theorem(config, workers=1))) == 4 * (2 + 3 + 4)


def test_fibonacci_structural_cells():
    records = evaluate_cell(small_config(), (1, 1, 1, 7))
    assert len(records) == 1
    assert records[0].s_min == 1
    assert records[0].status is RecordStatus.FOUND


def test_scanner_resumes_after_cell():
    scanner = TheoremScanner(small_config(), workers=1)
    cells = scanner.cells()
    assert scanner.cells(after=cells[4]) == cells[5:]
    resumed = [cell for cell, _ in scanner.run(after=cells[4])]
    assert resumed == cells[5:]


def test_violation_raises(monkeypatch):
    monkeypatch.setattr(Config, "THEOREM_CONSTANT", 0)
    monkeypatch.setattr(Config, "STRUCTURAL_EXPONENTS", ())
    with pytest.raises(TheoremViolation) as info:
        list(verify_theorem(small_config(), workers=1))
    assert not info.value.record.bound_ok


@pytest.fixture
def always_capped(monkeypatch):
    """Every cell exhausts s_cap and no structural identity applies."""
    import src.solver.scan as scan

    monkeypatch.setattr(scan, "min_s_over_n_detailed", lambda *args: ExponentResult(RecordStatus.CAPPED))
    monkeypatch.setattr(scan, "_confirm_structural", lambda *args: False)


def test_capped_cell_aborts_scan(always_capped):
    with pytest.raises(TheoremViolation) as info:
        list(verify_theorem(small_config(), workers=1))
    record = info.value.record
    assert record.status is RecordStatus.CAPPED
    assert record.coordinate == small_config().cells()[0]
    assert "capped" in str(info.value)


def test_capped_cell_certified_by_bound_when_enabled(always_capped):
    config = small_config(certify_capped_by_bound=True)
    records = list(verify_theorem(config, workers=1))
    assert len(records) == len(config.cells())
    assert all(r.status is RecordStatus.CAPPED and r.bound_ok for r in records)


def test_capped_opt_in_changes_config_hash():
    assert small_config().config_hash() != small_config(certify_capped_by_bound=True).config_hash()
    assert ScanConfig.from_dict(small_config(certify_capped_by_bound=True).to_dict()).certify_capped_by_bound


def test_summary_counts():
    config = small_config()
    summary = ScanSummary(grid_size=len(config.cells()))
    for record in verify_theorem(config, workers=1):
        summary.add(record)
    result = summary.as_dict()
    assert result["rows"] == result["grid_size"]
    assert result["violations"] == 0
    assert result["found"] + result["obstructed"] + result["capped"] == result["rows"]
