# flake8: noqa
from ._basis import BASIS_FORMAT_VERSION, FittedBasis, load_basis_json
from ._common import OutputFormat
from ._csv import load_csv, load_csv_with_names, write_csv
from ._report import (
    REPORT_FORMAT_VERSION, ReportRow, ScreeningRow, load_report,
    write_report, write_screening
)

__all__ = [
    "BASIS_FORMAT_VERSION", "FittedBasis", "OutputFormat",
    "REPORT_FORMAT_VERSION", "ReportRow", "ScreeningRow", "load_basis_json",
    "load_csv", "load_csv_with_names", "load_report", "write_csv",
    "write_report", "write_screening",
]
