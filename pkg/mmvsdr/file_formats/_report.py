import pandas as pd

from attr import attr, attributes
from attr.validators import instance_of

from mmvsdr.errors import InvalidDataset
from mmvsdr.evaluation import ExperimentReport
from ._common import (
    OutputFormat, read_json_document, write_json_document
)
from ._schemas import REPORT_V1


REPORT_FORMAT_VERSION = "1.0"

REPORT_COLUMNS = (
    "method", "mean_error_pct", "sd_error_pct", "repetitions",
    "single_repetition",
)

SCREENING_COLUMNS = ("rank", "column", "name", "mv")


def _percent(fraction):
    return round(100.0 * fraction, 2)


@attributes(frozen=True)
class ReportRow(object):
    """ One row of a cross-validation table: errors in percent, rounded to
    2 decimals."""
    method = attr(validator=instance_of(str))
    mean_error_pct = attr(converter=float)
    sd_error_pct = attr(converter=float)
    repetitions = attr(converter=int)
    single_repetition = attr(validator=instance_of(bool))

    @classmethod
    def from_report(cls, report):
        return cls(
            report.method, _percent(report.mean), _percent(report.sd),
            report.repetitions, report.single_repetition)

    def to_csv_row(self):
        return [
            self.method, "{0:.2f}".format(self.mean_error_pct),
            "{0:.2f}".format(self.sd_error_pct), str(self.repetitions),
            "true" if self.single_repetition else "false",
        ]


@attributes(frozen=True)
class ScreeningRow(object):
    rank = attr(validator=instance_of(int))
    column = attr(validator=instance_of(int))
    "0-based column index among the features."

    name = attr(validator=instance_of(str))
    mv = attr(converter=float)


def write_report(reports, fp, output_format, config=None):
    """ Write experiment reports as a table (csv) or a document (json).

    Both formats carry the same rounded percentages; the json document
    also keeps the per-repetition errors.
    """
    if output_format == OutputFormat.csv:
        rows = [
            ReportRow.from_report(report).to_csv_row() for report in reports
        ]
        frame = pd.DataFrame(rows, columns=list(REPORT_COLUMNS))
        frame.to_csv(fp, index=False, lineterminator="\n")
    else:
        entries = []
        for report in reports:
            row = ReportRow.from_report(report)
            entries.append({
                "method": row.method,
                "mean_error_pct": row.mean_error_pct,
                "sd_error_pct": row.sd_error_pct,
                "repetitions": row.repetitions,
                "single_repetition": row.single_repetition,
                "errors": list(report.errors),
            })
        data = {"format_version": REPORT_FORMAT_VERSION, "reports": entries}
        if config is not None:
            data["config"] = config
        write_json_document(data, fp)


def _load_csv_report(path):
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    missing = [c for c in REPORT_COLUMNS if c not in frame.columns]
    if len(missing) > 0:
        raise InvalidDataset(
            "Missing report columns in {0!r}: {1}".format(
                path, ", ".join(missing)))
    rows = []
    for record in frame.to_dict("records"):
        try:
            rows.append(ReportRow(
                record["method"], record["mean_error_pct"],
                record["sd_error_pct"], record["repetitions"],
                record["single_repetition"].lower() == "true"))
        except ValueError as e:
            raise InvalidDataset(
                "Invalid report row in {0!r}: {1}".format(path, e))
    return rows


def _load_json_report(path):
    data = read_json_document(path, REPORT_V1)
    rows = []
    for entry in data["reports"]:
        # recomputes and checks the summary statistics
        report = ExperimentReport.from_errors(entry["method"], entry["errors"])
        row = ReportRow(
            entry["method"], entry["mean_error_pct"], entry["sd_error_pct"],
            entry["repetitions"], entry["single_repetition"])
        if row != ReportRow.from_report(report):
            raise InvalidDataset(
                "Summary of {0!r} in {1!r} does not match its errors".format(
                    entry["method"], path))
        rows.append(row)
    return rows


def load_report(path, output_format=None):
    """ Read back the rows of a report written by :func:`write_report`.

    Parameters
    ----------
    path: str
    output_format: OutputFormat, None
        Guessed from the file extension if not given.
    """
    if output_format is None:
        output_format = OutputFormat.from_path(path)
    if output_format == OutputFormat.json:
        return _load_json_report(path)
    return _load_csv_report(path)


def write_screening(rows, fp, output_format):
    if output_format == OutputFormat.csv:
        frame = pd.DataFrame(
            [[row.rank, row.column, row.name, repr(float(row.mv))]
             for row in rows],
            columns=list(SCREENING_COLUMNS))
        frame.to_csv(fp, index=False, lineterminator="\n")
    else:
        write_json_document({
            "screened": [
                {"rank": row.rank, "column": row.column, "name": row.name,
                 "mv": row.mv}
                for row in rows
            ]
        }, fp)
