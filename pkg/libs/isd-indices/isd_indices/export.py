"""
Tabular output: result rows to DataFrames, and DataFrames to CSV, JSON or zip.
"""

import io
import json
import math
import zipfile
from pathlib import Path
from typing import Any, Iterable, Literal, Sequence

import numpy as np
from pandas import DataFrame

from .bounds import BOUND_REPORT_COLUMNS, BoundReport
from .collapse import COLLAPSE_COLUMNS, CollapseRow
from .ensemble import INEQUALITY_COLUMNS, SWEEP_COLUMNS, InequalityRow, SweepRow
from .utils import FLOAT_SIGNIFICANT_DIGITS, format_float

__all__ = [
    "OutputFormat",
    "rows_to_frame",
    "reports_to_frame",
    "sweep_rows_to_frame",
    "inequality_rows_to_frame",
    "collapse_rows_to_frame",
    "format_frame",
    "frame_to_text",
    "write_frame",
    "create_zip_from_dataframes",
]

OutputFormat = Literal["csv", "json"]


##############################
##### Rows to frames
##############################
def rows_to_frame(rows: Iterable[Any], columns: Sequence[str]) -> DataFrame:
    """Build a DataFrame from objects with ``as_row()``, in the given column order."""
    return DataFrame([row.as_row() for row in rows], columns=list(columns))


def reports_to_frame(reports: Iterable[BoundReport]) -> DataFrame:
    return rows_to_frame(reports, BOUND_REPORT_COLUMNS)


def sweep_rows_to_frame(rows: Iterable[SweepRow]) -> DataFrame:
    return rows_to_frame(rows, SWEEP_COLUMNS)


def inequality_rows_to_frame(rows: Iterable[InequalityRow]) -> DataFrame:
    return rows_to_frame(rows, INEQUALITY_COLUMNS)


def collapse_rows_to_frame(rows: Iterable[CollapseRow]) -> DataFrame:
    return rows_to_frame(rows, COLLAPSE_COLUMNS)


##############################
##### Rendering
##############################
def _format_cell(value: Any, digits: int) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(float(value), digits)
    return str(value)


def format_frame(df: DataFrame, digits: int = FLOAT_SIGNIFICANT_DIGITS) -> DataFrame:
    """Render every cell as text: floats with ``digits`` significant digits,
    booleans as true/false, None and NaN as empty strings."""
    return df.astype(object).map(lambda value: _format_cell(value, digits))


def _json_value(value: Any) -> Any:
    if value is None:
        return None
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return None
        return float(format_float(value))
    if isinstance(value, np.integer):
        return int(value)
    return value


def frame_to_text(df: DataFrame, fmt: OutputFormat = "csv") -> str:
    """CSV with a header row, or JSON as an array of flat objects with the same keys."""
    if fmt == "csv":
        buffer = io.StringIO()
        format_frame(df).to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()
    if fmt == "json":
        records = [
            {key: _json_value(value) for key, value in record.items()}
            for record in df.astype(object).to_dict("records")
        ]
        return json.dumps(records, indent=2) + "\n"
    raise ValueError(f"unknown output format '{fmt}' (expected csv or json)")


def write_frame(df: DataFrame, path: str | Path, fmt: OutputFormat = "csv") -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(frame_to_text(df, fmt))
    return path


def create_zip_from_dataframes(
    dataframes: list[tuple[str, DataFrame]],
    zip_path: str | Path,
    fmt: OutputFormat = "csv",
) -> Path:
    """Write several DataFrames into one zip archive.

    Args:
        dataframes: List of tuples (filename inside the archive, DataFrame)
        zip_path: Archive to create (parent directories are created)
        fmt: Rendering used for every member
    """
    zip_path = Path(zip_path)
    zip_path.parent.mkdir(parents=True, exist_ok=True)

    with zipfile.ZipFile(
        zip_path,
        "w",
        compression=zipfile.ZIP_DEFLATED,
        allowZip64=True,
    ) as zip_file:
        for filename, df in dataframes:
            zip_file.writestr(filename, frame_to_text(df, fmt).encode("utf-8"))

    return zip_path
