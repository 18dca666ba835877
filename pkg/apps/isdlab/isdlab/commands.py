"""
One function per isdlab verb.

Each ``run_*`` takes already parsed inputs, does the work through
``isd_indices`` and returns tables or written paths; parsing arguments,
printing and exit codes belong to ``isdlab.app``.
"""

import logging
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Sequence

from pandas import DataFrame

from isd_indices import (
    EnsembleConfig,
    Graph,
    IndexSpec,
    OutputFormat,
    avg_inequality_check,
    collapse_rows_to_frame,
    create_zip_from_dataframes,
    ensemble_average,
    evaluate,
    get_thread_count,
    inequality_rows_to_frame,
    named_graph,
    default_check_grid,
    read_edge_list,
    reports_to_frame,
    scaling_collapse,
    sweep_rows_to_frame,
    verify_all,
    write_frame,
)

from .config import CHECK_FILENAME_TEMPLATE, SWEEP_FILENAME, ZIP_FILENAME
from .tables import FILTER_REGISTRY, SweepRelation

__all__ = [
    "SweepOutput",
    "load_graph",
    "run_index",
    "run_verify",
    "run_sweep",
    "run_collapse",
]

logger = logging.getLogger(__name__)


def load_graph(
    path: str | Path | None = None, name: str | None = None, strict: bool = True
) -> Graph:
    """Read an edge-list file, or build a named graph when ``name`` is given."""
    if (path is None) == (name is None):
        raise ValueError("give exactly one of a graph file or --graph NAME")
    if name is not None:
        return named_graph(name)
    graph = read_edge_list(path, strict=strict)
    logger.debug("read %r from %s", graph, path)
    return graph


def run_index(graph: Graph, specs: Sequence[IndexSpec]) -> DataFrame:
    """One row per spec with the computed value."""
    records = [
        {
            "spec": spec.label,
            "family": spec.family,
            "a": spec.exponent,
            "value": evaluate(spec, graph),
        }
        for spec in specs
    ]
    return DataFrame(records, columns=["spec", "family", "a", "value"])


def run_verify(graph: Graph, a_grid: Sequence[float]) -> tuple[DataFrame, bool]:
    """All bound reports, and whether every applicable one holds."""
    reports = verify_all(graph, a_grid, max_workers=get_thread_count())
    all_hold = all(report.holds for report in reports if report.applicable)
    return reports_to_frame(reports), all_hold


@dataclass(frozen=True)
class SweepOutput:
    paths: list[Path]
    violations: int


def _with_suffix(filename: str, fmt: OutputFormat) -> str:
    return str(Path(filename).with_suffix(f".{fmt}"))


def run_sweep(
    cfg: EnsembleConfig,
    spec: IndexSpec,
    checks: Sequence[str] = (),
    out_dir: str | Path = ".",
    *,
    check_a_grid: Sequence[float] | None = None,
    fmt: OutputFormat = "csv",
    as_zip: bool = False,
    progress: bool = False,
) -> SweepOutput:
    """Write the sweep table plus one table per averaged-inequality check.

    Each check runs on the sweep's n, p grid, replicas and seed, with its own
    exponent grid (``check_a_grid`` or the inequality's default grid).
    """
    out_dir = Path(out_dir)
    sweep_rows = ensemble_average(cfg, spec, progress=progress)
    frames: list[tuple[str, DataFrame]] = [
        (_with_suffix(SWEEP_FILENAME, fmt), sweep_rows_to_frame(sweep_rows))
    ]
    logger.info("%s: %d sweep rows", spec.label, len(sweep_rows))

    violations = 0
    for which in checks:
        grid = tuple(check_a_grid) if check_a_grid is not None else default_check_grid(which)
        check_rows = avg_inequality_check(replace(cfg, a_grid=grid), which, progress=progress)
        violations += sum(not row.holds() for row in check_rows)
        filename = _with_suffix(CHECK_FILENAME_TEMPLATE.format(name=which), fmt)
        frames.append((filename, inequality_rows_to_frame(check_rows)))

    if as_zip:
        paths = [create_zip_from_dataframes(frames, out_dir / ZIP_FILENAME, fmt)]
    else:
        paths = [write_frame(df, out_dir / filename, fmt) for filename, df in frames]
    return SweepOutput(paths, violations)


def run_collapse(
    paths: Sequence[str | Path],
    filters: dict[str, Any] | None = None,
    min_mean_degree: float = 10.0,
    max_mean_degree: float = math.inf,
) -> DataFrame:
    """Collapse report over the (filtered) rows of one or more sweep files."""
    filters = dict(filters or {})
    filters.setdefault("min_mean_degree", min_mean_degree)
    if math.isfinite(max_mean_degree):
        filters.setdefault("max_mean_degree", max_mean_degree)

    for line in FILTER_REGISTRY.format_display(filters):
        logger.info("filter %s", line)

    relation = SweepRelation(paths, filters)
    rows = relation.rows()
    logger.info("%d sweep rows for n = %s", len(rows), relation.sizes())
    report = scaling_collapse(rows, min_mean_degree, max_mean_degree)
    return collapse_rows_to_frame(report)
