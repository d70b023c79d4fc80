"""
Tests for report rows and scan checkpoints.
"""

import io
import json

import pytest

from src.errors import CheckpointMismatch, InvalidInputError
from src.lucas import LucasParams
from src.reports import (
    CSV_HEADER,
    Checkpoint,
    CsvReportWriter,
    ReportRow,
    json_line,
    read_csv_report,
    truncate_report,
    write_csv_report,
)
from src.solver import DivRecord, RecordStatus, ScanConfig, make_record


def found_record() -> DivRecord:
    return make_record(LucasParams(1, 1), 1, 7, 1, 1, RecordStatus.FOUND, 28)


def capped_record() -> DivRecord:
    return make_record(LucasParams(3, -1), 2, 9, None, None, RecordStatus.CAPPED, 36, certify_capped_by_bound=True)


def test_json_row_layout():
    line = ReportRow.from_div_record(found_record()).to_json()
    data = json.loads(line)
    assert list(data)[:2] == ["schema_version", "kind"]
    assert data["kind"] == "div"
    assert data["status"] == "found"
    assert " " not in line


def test_json_row_round_trip():
    row = ReportRow.from_div_record(capped_record())
    back = ReportRow.from_json(row.to_json())
    assert back == row
    assert back.to_div_record() == capped_record()


def test_big_fields_are_strings():
    line = json_line("seq", {"n": 200, "u_n": 10 ** 40, "v_n": 3})
    data = json.loads(line)
    assert data["u_n"] == str(10 ** 40)
    assert data["v_n"] == "3"
    assert data["n"] == 200
    assert ReportRow.from_json(line).values["u_n"] == 10 ** 40


def test_unknown_schema_version():
    with pytest.raises(InvalidInputError):
        ReportRow.from_json('{"schema_version":"0","kind":"div"}')
    with pytest.raises(InvalidInputError):
        ReportRow.from_json("not json")


def test_csv_fields():
    assert ReportRow.from_div_record(found_record()).to_csv_fields() == ["1", "1", "1", "7", "1", "1", "true", "true"]
    assert ReportRow.from_div_record(capped_record()).to_csv_fields() == ["3", "-1", "2", "9", "", "", "false", "true"]


def test_csv_round_trip():
    stream = io.StringIO()
    writer = CsvReportWriter(stream)
    writer.write(found_record())
    writer.write(capped_record())
    assert writer.rows == 2
    assert stream.getvalue().splitlines()[0] == ",".join(CSV_HEADER)

    rows = read_csv_report(io.StringIO(stream.getvalue()))
    assert [r.to_div_record() for r in rows] == [found_record(), capped_record()]

    again = io.StringIO()
    write_csv_report(again, rows)
    assert again.getvalue() == stream.getvalue()


def test_obstructed_reads_back_as_capped():
    record = make_record(LucasParams(1, 1), 1, 5, None, None, RecordStatus.OBSTRUCTED, 20)
    stream = io.StringIO()
    CsvReportWriter(stream).write(record)
    (row,) = read_csv_report(io.StringIO(stream.getvalue()))
    assert row.to_div_record().status is RecordStatus.CAPPED


def test_csv_rejects_bad_rows():
    with pytest.raises(InvalidInputError):
        ReportRow.from_csv_fields(["1", "1"])
    with pytest.raises(InvalidInputError):
        read_csv_report(io.StringIO("a,b\n1,1\n"))
    assert read_csv_report(io.StringIO("")) == []


def test_non_div_row_has_no_record():
    with pytest.raises(InvalidInputError):
        ReportRow(kind="seq", values={"n": 1}).to_div_record()


def test_checkpoint_save_and_load(tmp_path):
    config = ScanConfig(a_min=1, a_max=2, m_max=10)
    checkpoint = Checkpoint.start(config).advance((1, 1, 1, 2), 1).advance((1, 1, 1, 3), 1)
    path = tmp_path / "scan.ckpt"
    checkpoint.save(path)
    assert not (tmp_path / "scan.ckpt.tmp").exists()

    loaded = Checkpoint.load(path)
    assert loaded == checkpoint
    assert loaded.last_completed == (1, 1, 1, 3)
    assert loaded.rows_emitted == 2
    loaded.verify(config)


def test_checkpoint_config_mismatch():
    checkpoint = Checkpoint.start(ScanConfig(a_min=1, a_max=2, m_max=10))
    with pytest.raises(CheckpointMismatch):
        checkpoint.verify(ScanConfig(a_min=1, a_max=2, m_max=11))


def test_checkpoint_load_errors(tmp_path):
    with pytest.raises(InvalidInputError):
        Checkpoint.load(tmp_path / "missing.ckpt")


def test_truncate_report(report_path):
    report_path.write_text("h\nr1\nr2\nr3\npartial", encoding="utf-8")
    truncate_report(report_path, 2)
    assert report_path.read_text(encoding="utf-8") == "h\nr1\nr2\n"
    with pytest.raises(CheckpointMismatch):
        truncate_report(report_path, 5)
    with pytest.raises(InvalidInputError):
        truncate_report(report_path.with_name("other.csv"), 0)
