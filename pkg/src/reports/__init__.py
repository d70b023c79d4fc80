# Reports module
from .rows import (
    CSV_HEADER,
    BIG_FIELDS,
    ReportRow,
    CsvReportWriter,
    read_csv_report,
    write_csv_report,
    json_line,
)
from .checkpoint import Checkpoint, truncate_report

__all__ = [
    "CSV_HEADER",
    "BIG_FIELDS",
    "ReportRow",
    "CsvReportWriter",
    "read_csv_report",
    "write_csv_report",
    "json_line",
    "Checkpoint",
    "truncate_report",
]
