"""
DuckDB-based access to result files.

Sweep outputs are plain CSV files; ``DuckCsvRelation`` reads one or many of them
as a single lazily built relation, so filters are pushed into the scan and only
the selected rows are ever materialized.
"""

import logging
import threading
from pathlib import Path
from typing import Any, Sequence

import duckdb
from pandas import DataFrame

from .ensemble import SweepRow
from .filters import FilterConfig, FilterType, resolve_filter_type

__all__ = [
    "DuckDBManager",
    "DuckCsvRelation",
    "load_sweep_rows",
]

logger = logging.getLogger(__name__)


class DuckDBManager:
    """
    Thread-local DuckDB connections.

    Each thread gets its own in-memory connection, since a DuckDB connection
    must not be shared between threads running queries concurrently.
    """

    _thread_local = threading.local()

    @classmethod
    def get_connection(cls) -> duckdb.DuckDBPyConnection:
        """Get or create the calling thread's connection."""
        if getattr(cls._thread_local, "connection", None) is None:
            cls._thread_local.connection = duckdb.connect()
            logger.debug("DuckDB connection ready on %s", threading.current_thread().name)
        return cls._thread_local.connection


def _sql_string(value: str) -> str:
    return "'" + value.replace("'", "''") + "'"


class DuckCsvRelation:
    """
    Lazily built query plan over one or more CSV files with a header row.

    Query logic accumulates through ``add_where`` / ``set_projection`` and
    filters from ``_filter_configs``; the files are only scanned when a
    materialization is requested via ``df()``, ``count()`` or ``distinct()``.
    Files are combined by column name, so sweeps with extra columns mix with
    sweeps that lack them (missing values read as NULL).

    Subclasses bind a schema by setting ``_filter_configs``.
    """

    _filter_configs: list[FilterConfig] | None = None

    ##############################
    ##### Initialization with filter state
    ##############################
    def __init__(
        self,
        paths: str | Path | Sequence[str | Path],
        filters: dict[str, Any] | None = None,
    ):
        if isinstance(paths, (str, Path)):
            paths = [paths]
        self.paths = [str(Path(p)) for p in paths]
        if not self.paths:
            raise ValueError("at least one CSV path is required")
        missing = [p for p in self.paths if not Path(p).is_file()]
        if missing:
            raise FileNotFoundError(f"no such file: {missing[0]}")

        self._connection = DuckDBManager.get_connection()
        self._filters: list[str] = []
        self._projections: list[str] | None = None

        if filters:
            self._apply_filters(filters)

    def _apply_filters(self, filters: dict[str, Any]) -> "DuckCsvRelation":
        """Convert filter values to WHERE conditions using the relation's filter configs."""
        if not self._filter_configs:
            return self

        for filter_config in self._filter_configs:
            filter_value: Any = filters.get(filter_config.filter_key)
            if filter_value is None:
                continue

            filter_type: FilterType = resolve_filter_type(filter_config)
            condition = filter_type.build_condition(filter_config.field_name, filter_value)
            if condition:
                self.add_where(condition)

        return self

    ##############################
    ##### Query plan methods
    ##############################
    def add_where(self, condition: str) -> "DuckCsvRelation":
        self._filters.append(condition)
        return self

    def set_projection(self, *columns: str) -> "DuckCsvRelation":
        self._projections = list(columns)
        return self

    def _build_relation(self, include_projections: bool = True) -> duckdb.DuckDBPyRelation:
        files = ", ".join(_sql_string(p) for p in self.paths)
        rel = self._connection.sql(
            f"SELECT * FROM read_csv([{files}], header = true, union_by_name = true)"
        )

        for condition in self._filters:
            rel = rel.filter(condition)

        if include_projections and self._projections:
            rel = rel.project(", ".join(self._projections))

        return rel

    ##############################
    ##### Query execution methods
    ##############################
    def df(self) -> DataFrame:
        """Materialize the query plan to a pandas DataFrame."""
        return self._build_relation(include_projections=True).df()

    def count(self) -> int:
        rel = self._build_relation(include_projections=False)
        return rel.count("*").fetchone()[0]

    def distinct(self, column: str) -> list:
        rel = self._build_relation().project(column).distinct()
        return [row[0] for row in rel.fetchall()]


def load_sweep_rows(relation: DuckCsvRelation) -> list[SweepRow]:
    """Materialize a relation over sweep files as SweepRow objects."""
    df = relation.df()
    records = df.astype(object).where(df.notna(), None).to_dict("records")
    return [SweepRow.from_record(record) for record in records]
