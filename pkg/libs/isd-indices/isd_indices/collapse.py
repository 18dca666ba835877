"""
Scaling collapse of sweep results across graph sizes.

Plotted as index / n against the mean degree, sweeps of different n fall on one
curve once the mean degree is large enough. ``scaling_collapse`` measures how
well they do: each size's curve is interpolated in log-log space onto a shared
mean-degree grid, and the spread across sizes and the distance to the dense
approximation are reported per (family, a).
"""

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Final, Iterable

import numpy as np

from .ensemble import SweepRow
from .errors import InsufficientOverlap
from .utils import log_timing

__all__ = [
    "DEFAULT_MIN_MEAN_DEGREE",
    "COLLAPSE_COLUMNS",
    "CollapseRow",
    "scaling_collapse",
]

logger = logging.getLogger(__name__)

DEFAULT_MIN_MEAN_DEGREE: Final[float] = 10.0
DEFAULT_GRID_POINTS: Final[int] = 50

COLLAPSE_COLUMNS: Final[list[str]] = [
    "family",
    "a",
    "n_values",
    "min_mean_degree",
    "max_mean_degree",
    "points",
    "max_spread",
    "max_approx_deviation",
]


@dataclass(frozen=True)
class CollapseRow:
    """
    Collapse quality for one (family, a) curve.

    Args:
        n_values: graph sizes that entered the comparison
        min_mean_degree, max_mean_degree: the shared mean-degree range
        points: grid points in that range
        max_spread: max over the grid of (max - min) / mean of index / n across sizes
        max_approx_deviation: max over grid and sizes of |ratio - approx| / approx
    """

    family: str
    a: float
    n_values: tuple[int, ...]
    min_mean_degree: float
    max_mean_degree: float
    points: int
    max_spread: float
    max_approx_deviation: float

    def as_row(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "a": self.a,
            "n_values": ";".join(str(n) for n in self.n_values),
            "min_mean_degree": self.min_mean_degree,
            "max_mean_degree": self.max_mean_degree,
            "points": self.points,
            "max_spread": self.max_spread,
            "max_approx_deviation": self.max_approx_deviation,
        }


def _curve_key(row: SweepRow) -> tuple[str, float | None]:
    return row.family, None if math.isnan(row.a) else row.a


def _log_curve(rows: list[SweepRow]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(log d, log ratio, log approx_ratio) sorted by mean degree, one point per degree."""
    usable = [
        r
        for r in rows
        if math.isfinite(r.mean_deg)
        and r.mean_deg > 0
        and r.scaled_ratio > 0
        and r.approx_ratio > 0
    ]
    usable.sort(key=lambda r: r.mean_deg)
    chosen: list[SweepRow] = []
    for r in usable:
        if not chosen or r.mean_deg > chosen[-1].mean_deg:
            chosen.append(r)
    return (
        np.log(np.array([r.mean_deg for r in chosen], dtype=np.float64)),
        np.log(np.array([r.scaled_ratio for r in chosen], dtype=np.float64)),
        np.log(np.array([r.approx_ratio for r in chosen], dtype=np.float64)),
    )


def _sort_key(key: tuple[str, float | None]) -> tuple[str, float]:
    family, a = key
    return family, -math.inf if a is None else a


@log_timing
def scaling_collapse(
    rows: Iterable[SweepRow],
    min_mean_degree: float = DEFAULT_MIN_MEAN_DEGREE,
    max_mean_degree: float = math.inf,
    points: int = DEFAULT_GRID_POINTS,
) -> list[CollapseRow]:
    """Compare index / n across graph sizes on their shared mean-degree range.

    Raises:
        InsufficientOverlap: a curve has fewer than two sizes, or the sizes'
            mean-degree ranges do not overlap inside
            ``[min_mean_degree, max_mean_degree]``
    """
    curves: dict[tuple[str, float | None], dict[int, list[SweepRow]]] = defaultdict(
        lambda: defaultdict(list)
    )
    for row in rows:
        curves[_curve_key(row)][row.n].append(row)
    if not curves:
        raise InsufficientOverlap("no sweep rows to compare")

    report: list[CollapseRow] = []
    for (family, a), by_n in sorted(curves.items(), key=lambda item: _sort_key(item[0])):
        label = family if a is None else f"{family}:{a:.12g}"
        sizes = sorted(by_n)
        if len(sizes) < 2:
            raise InsufficientOverlap(
                f"{label}: need sweeps for at least two graph sizes, got n = {sizes}"
            )

        logs = {n: _log_curve(by_n[n]) for n in sizes}
        if any(logs[n][0].size == 0 for n in sizes):
            raise InsufficientOverlap(f"{label}: some sizes have no usable rows")

        low = max([math.log(min_mean_degree)] + [float(logs[n][0][0]) for n in sizes])
        high = min(
            [math.log(max_mean_degree) if math.isfinite(max_mean_degree) else math.inf]
            + [float(logs[n][0][-1]) for n in sizes]
        )
        if not low <= high:
            raise InsufficientOverlap(
                f"{label}: mean-degree ranges of n = {sizes} share no point with "
                f"degree >= {min_mean_degree:g}"
            )

        grid = np.linspace(low, high, points) if high > low else np.array([low])
        ratios = np.vstack([np.exp(np.interp(grid, logs[n][0], logs[n][1])) for n in sizes])
        approx = np.vstack([np.exp(np.interp(grid, logs[n][0], logs[n][2])) for n in sizes])

        spread = (ratios.max(axis=0) - ratios.min(axis=0)) / ratios.mean(axis=0)
        deviation = np.abs(ratios - approx) / approx

        row = CollapseRow(
            family=family,
            a=math.nan if a is None else a,
            n_values=tuple(sizes),
            min_mean_degree=float(math.exp(low)),
            max_mean_degree=float(math.exp(high)),
            points=int(grid.size),
            max_spread=float(spread.max()),
            max_approx_deviation=float(deviation.max()),
        )
        logger.debug(
            "%s: spread %.3g, approximation deviation %.3g over d in [%.3g, %.3g]",
            label,
            row.max_spread,
            row.max_approx_deviation,
            row.min_mean_degree,
            row.max_mean_degree,
        )
        report.append(row)
    return report
