"""
Ensemble averages over Erdos-Renyi random graphs.

For every edge probability ``p`` of a sweep, ``replicas`` graphs are drawn from
G(n, p) (one Philox stream per replica, reused for every ``p``), each graph is
measured once for the whole exponent grid, and the per-cell means and standard
errors are reduced with correctly rounded sums. Results therefore depend only on
the configuration and seed, never on the worker count.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from functools import partial
from typing import Any, Callable, Final, Literal

import numpy as np
from tqdm import tqdm

from .aggregations import SampleSummary, summarize_columns
from .errors import DegenerateSample, InvalidConfig, RegimeViolation
from .graph import Graph
from .grids import inclusive_range, validate_grid
from .indices import (
    IndexSpec,
    dense_approximation,
    evaluate,
    general_sum_connectivity,
    isd,
    variable_first_zagreb,
)
from .random_graphs import MAX_SAMPLE_ATTEMPTS, er_sample_counted, replica_stream
from .utils import get_thread_count, log_timing

__all__ = [
    "UNTRUSTED_REJECTION_RATE",
    "SWEEP_COLUMNS",
    "INEQUALITY_COLUMNS",
    "DegeneratePolicy",
    "AveragedInequality",
    "EnsembleConfig",
    "SweepRow",
    "InequalityRow",
    "AveragedInequalityConfig",
    "AVERAGED_INEQUALITIES",
    "ensemble_average",
    "avg_inequality_check",
    "default_check_grid",
]

logger = logging.getLogger(__name__)

UNTRUSTED_REJECTION_RATE: Final[float] = 0.01

DegeneratePolicy = Literal["raise", "skip"]
AveragedInequality = Literal["Eq1av", "Eq2av", "Eq3av", "Eq4av", "Eq5av", "Eq6av"]

SWEEP_COLUMNS: Final[list[str]] = [
    "n",
    "p",
    "a",
    "replicas",
    "mean_isd",
    "stderr_isd",
    "mean_edges",
    "mean_deg",
    "approx_isd",
    "scaled_ratio",
    "approx_ratio",
    "rejections",
    "sample_count",
    "rejection_rate",
    "untrusted",
    "family",
]

INEQUALITY_COLUMNS: Final[list[str]] = [
    "inequality",
    "n",
    "p",
    "a",
    "lhs",
    "rhs",
    "margin",
    "stderr",
    "relative_margin",
    "sample_count",
    "rejections",
]


##############################
##### Configuration and rows
##############################
@dataclass(frozen=True)
class EnsembleConfig:
    """
    One sweep over G(n, p).

    Args:
        n: vertex count (at least 2)
        p_grid: strictly increasing edge probabilities in (0, 1)
        a_grid: strictly increasing exponents
        replicas: graphs drawn per p
        seed: 64-bit seed; replica r draws from the stream keyed by (seed, r)
        degenerate_policy: "raise" propagates DegenerateSample, "skip" drops
            the replica and counts its attempts as rejections
        max_attempts: draws per replica before it is declared degenerate
    """

    n: int
    p_grid: tuple[float, ...]
    a_grid: tuple[float, ...]
    replicas: int
    seed: int
    degenerate_policy: DegeneratePolicy = "raise"
    max_attempts: int = MAX_SAMPLE_ATTEMPTS

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 2:
            raise InvalidConfig(f"n must be an integer >= 2, got {self.n}")
        p_grid = validate_grid(self.p_grid, "p_grid")
        outside = [p for p in p_grid if not 0 < p < 1]
        if outside:
            raise InvalidConfig(f"p must lie strictly between 0 and 1, got {outside[0]}")
        a_grid = validate_grid(self.a_grid, "a_grid")
        if isinstance(self.replicas, bool) or int(self.replicas) != self.replicas or self.replicas < 1:
            raise InvalidConfig(f"replicas must be a positive integer, got {self.replicas}")
        if self.degenerate_policy not in ("raise", "skip"):
            raise InvalidConfig(f"unknown degenerate policy '{self.degenerate_policy}'")
        if self.max_attempts < 1:
            raise InvalidConfig(f"max_attempts must be positive, got {self.max_attempts}")

        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "p_grid", p_grid)
        object.__setattr__(self, "a_grid", a_grid)
        object.__setattr__(self, "replicas", int(self.replicas))
        object.__setattr__(self, "seed", int(self.seed))


@dataclass(frozen=True)
class SweepRow:
    """Ensemble statistics of one index at one (p, a) cell.

    ``a`` is NaN for index families without an exponent.
    """

    n: int
    p: float
    a: float
    replicas: int
    mean_isd: float
    stderr_isd: float
    mean_edges: float
    mean_deg: float
    approx_isd: float
    scaled_ratio: float
    approx_ratio: float
    rejections: int
    sample_count: int
    rejection_rate: float
    untrusted: bool
    family: str = "isd"

    def as_row(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> "SweepRow":
        """Rebuild a row from a parsed CSV record; missing extras get neutral values."""

        def number(key: str, default: float = math.nan) -> float:
            value = record.get(key)
            if value is None or (isinstance(value, float) and math.isnan(value)):
                return default
            return float(value)

        rejections = int(number("rejections", 0.0))
        replicas = int(number("replicas", 0.0))
        sample_count = int(number("sample_count", float(replicas)))
        rate = number("rejection_rate")
        if math.isnan(rate):
            draws = sample_count + rejections
            rate = rejections / draws if draws else math.nan
        untrusted = record.get("untrusted")
        if untrusted is None or (isinstance(untrusted, float) and math.isnan(untrusted)):
            untrusted = rate > UNTRUSTED_REJECTION_RATE
        family = record.get("family")
        if not isinstance(family, str) or not family:
            family = "isd"

        return cls(
            n=int(number("n")),
            p=number("p"),
            a=number("a"),
            replicas=replicas,
            mean_isd=number("mean_isd"),
            stderr_isd=number("stderr_isd"),
            mean_edges=number("mean_edges"),
            mean_deg=number("mean_deg"),
            approx_isd=number("approx_isd"),
            scaled_ratio=number("scaled_ratio"),
            approx_ratio=number("approx_ratio"),
            rejections=rejections,
            sample_count=sample_count,
            rejection_rate=rate,
            untrusted=bool(untrusted),
            family=family,
        )


@dataclass(frozen=True)
class InequalityRow:
    """One averaged inequality ``lhs <= rhs`` at one (p, a) cell.

    ``stderr`` is the standard error of the per-sample margin and
    ``relative_margin`` is ``margin / |lhs|`` (NaN when lhs is 0).
    """

    inequality: AveragedInequality
    n: int
    p: float
    a: float
    lhs: float
    rhs: float
    margin: float
    stderr: float
    relative_margin: float
    sample_count: int
    rejections: int

    def holds(self, sigmas: float = 3.0) -> bool:
        """True when the margin is no more than ``sigmas`` standard errors below zero."""
        if math.isnan(self.margin):
            return True
        band = 0.0 if math.isnan(self.stderr) else sigmas * self.stderr
        return self.margin >= -band

    def as_row(self) -> dict[str, Any]:
        return asdict(self)


##############################
##### Averaged inequalities
##############################
def _isd_term(g: Graph, a: float) -> float:
    return isd(g, a)


def _scaled_chi(g: Graph, a: float) -> float:
    return 2.0 ** (a - 1.0) * general_sum_connectivity(g, -a)


def _isd_plus_m1(g: Graph, a: float) -> float:
    return isd(g, a) + variable_first_zagreb(g, a + 1.0)


def _isd_times_m1(g: Graph, a: float) -> float:
    return isd(g, a) * variable_first_zagreb(g, a + 1.0)


def _edge_count_squared(g: Graph, a: float) -> float:
    return float(g.m) ** 2


def _expected_edges(n: int, p: float) -> float:
    return n * (n - 1) * p / 2.0


@dataclass(frozen=True)
class AveragedInequalityConfig:
    """
    An inequality between ensemble averages, ``<lhs> <= <rhs>``.

    Args:
        name: identifier
        theorem: the per-graph theorem it averages
        regime: human-readable domain of ``a``
        in_regime: predicate on ``a``
        rhs: per-graph right-hand side
        lhs: per-graph left-hand side, or None when ``expected_lhs`` is used
        expected_lhs: (n, p) -> analytic left-hand side
        default_grid: exponent grid checked when no grid is given
    """

    name: AveragedInequality
    theorem: str
    regime: str
    in_regime: Callable[[float], bool]
    rhs: Callable[[Graph, float], float]
    lhs: Callable[[Graph, float], float] | None = None
    expected_lhs: Callable[[int, float], float] | None = None
    default_grid: tuple[float, ...] = ()


AVERAGED_INEQUALITIES: dict[str, AveragedInequalityConfig] = {
    "Eq1av": AveragedInequalityConfig(
        name="Eq1av",
        theorem="T4_ChiRelation",
        regime="a > 1",
        in_regime=lambda a: a > 1,
        lhs=_isd_term,
        rhs=_scaled_chi,
        default_grid=inclusive_range(1.1, 2.0, 0.1),
    ),
    "Eq2av": AveragedInequalityConfig(
        name="Eq2av",
        theorem="T4_ChiRelation",
        regime="0 < a < 1",
        in_regime=lambda a: 0 < a < 1,
        lhs=_scaled_chi,
        rhs=_isd_term,
        default_grid=inclusive_range(0.1, 0.9, 0.1),
    ),
    "Eq3av": AveragedInequalityConfig(
        name="Eq3av",
        theorem="T4_ChiRelation",
        regime="a < 0",
        in_regime=lambda a: a < 0,
        lhs=_isd_term,
        rhs=_scaled_chi,
        default_grid=inclusive_range(-2.0, -0.1, 0.1),
    ),
    "Eq4av": AveragedInequalityConfig(
        name="Eq4av",
        theorem="T7_M1Sum",
        regime="a > 0",
        in_regime=lambda a: a > 0,
        rhs=_isd_plus_m1,
        expected_lhs=lambda n, p: 2.5 * _expected_edges(n, p),
        default_grid=inclusive_range(0.1, 2.0, 0.1),
    ),
    "Eq5av": AveragedInequalityConfig(
        name="Eq5av",
        theorem="T7_M1Sum",
        regime="a < 0",
        in_regime=lambda a: a < 0,
        rhs=_isd_plus_m1,
        expected_lhs=lambda n, p: 2.0 * _expected_edges(n, p),
        default_grid=inclusive_range(-2.0, -0.1, 0.1),
    ),
    "Eq6av": AveragedInequalityConfig(
        name="Eq6av",
        theorem="T10_M1Product",
        regime="a != 0",
        in_regime=lambda a: a != 0,
        lhs=_edge_count_squared,
        rhs=_isd_times_m1,
        default_grid=tuple(a for a in inclusive_range(-2.0, 2.0, 0.2) if a != 0),
    ),
}


def _resolve_inequality(which: str) -> AveragedInequalityConfig:
    config = AVERAGED_INEQUALITIES.get(which)
    if config is None:
        known = ", ".join(AVERAGED_INEQUALITIES)
        raise InvalidConfig(f"unknown averaged inequality '{which}' (expected one of {known})")
    return config


def default_check_grid(which: AveragedInequality) -> tuple[float, ...]:
    """Exponent grid checked for ``which`` when none is given."""
    return _resolve_inequality(which).default_grid


##############################
##### Sampling
##############################
@dataclass(frozen=True)
class _CellSamples:
    """Per-replica measurements for one p, rows in replica order."""

    values: np.ndarray
    rejections: int

    @property
    def count(self) -> int:
        return int(self.values.shape[0])


def _measure_replica(
    cfg: EnsembleConfig,
    p: float,
    measure: Callable[[Graph], list[float]],
    replica: int,
) -> tuple[list[float] | None, int]:
    rng = replica_stream(cfg.seed, replica)
    try:
        g, rejected = er_sample_counted(cfg.n, p, rng, cfg.max_attempts)
    except DegenerateSample:
        if cfg.degenerate_policy == "raise":
            raise
        return None, cfg.max_attempts
    return measure(g), rejected


def _collect_samples(
    cfg: EnsembleConfig,
    measure: Callable[[Graph], list[float]],
    width: int,
    progress: bool = False,
    desc: str = "p",
) -> list[_CellSamples]:
    """Measure ``replicas`` graphs at every p of the sweep."""
    workers = max(1, min(get_thread_count(), cfg.replicas))
    cells: list[_CellSamples] = []

    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for p in tqdm(cfg.p_grid, desc=desc, unit="p", disable=not progress):
            run = partial(_measure_replica, cfg, p, measure)
            replicas = range(cfg.replicas)
            results = list(pool.map(run, replicas)) if pool else [run(r) for r in replicas]

            accepted = [values for values, _ in results if values is not None]
            rejections = sum(rejected for _, rejected in results)
            values = (
                np.asarray(accepted, dtype=np.float64)
                if accepted
                else np.empty((0, width), dtype=np.float64)
            )
            if rejections:
                logger.debug(
                    "G(%d, %s): %d rejected draw(s), %d replica(s) dropped",
                    cfg.n,
                    p,
                    rejections,
                    cfg.replicas - len(accepted),
                )
            cells.append(_CellSamples(values, rejections))
    finally:
        if pool is not None:
            pool.shutdown()
    return cells


def _rejection_rate(cell: _CellSamples) -> float:
    draws = cell.count + cell.rejections
    return cell.rejections / draws if draws else math.nan


##############################
##### Public operations
##############################
@log_timing
def ensemble_average(
    cfg: EnsembleConfig, spec: IndexSpec, *, progress: bool = False
) -> list[SweepRow]:
    """Mean and standard error of ``spec`` over G(n, p) for every (p, a) cell.

    Rows come out p-major, a-minor. Families without an exponent yield one
    row per p with ``a`` set to NaN. ``approx_isd`` is the dense approximation
    at the expected degree (n - 1) p; ``approx_ratio`` is the same
    approximation per vertex at the measured mean degree.
    """
    if spec.config.takes_exponent:
        specs = [spec.with_exponent(a) for a in cfg.a_grid]
        exponents = list(cfg.a_grid)
    else:
        specs = [spec]
        exponents = [math.nan]
    n = cfg.n

    def measure(g: Graph) -> list[float]:
        return [evaluate(s, g) for s in specs] + [float(g.m), 2.0 * g.m / g.n]

    cells = _collect_samples(cfg, measure, len(specs) + 2, progress, desc=spec.label)

    rows: list[SweepRow] = []
    for p, cell in zip(cfg.p_grid, cells):
        summaries = summarize_columns(cell.values) if cell.count else None
        edges = summaries[-2] if summaries else SampleSummary.from_values([])
        degree = summaries[-1] if summaries else SampleSummary.from_values([])
        rate = _rejection_rate(cell)
        untrusted = bool(rate > UNTRUSTED_REJECTION_RATE) or cell.count < 2
        if untrusted:
            logger.warning(
                "G(%d, %s) is untrusted: %d of %d replicas kept, rejection rate %.3g",
                n,
                p,
                cell.count,
                cfg.replicas,
                rate,
            )

        for j, (s, a) in enumerate(zip(specs, exponents)):
            value = summaries[j] if summaries else SampleSummary.from_values([])
            approx_ratio = (
                dense_approximation(s, n, degree.mean) / n
                if math.isfinite(degree.mean)
                else math.nan
            )
            rows.append(
                SweepRow(
                    n=n,
                    p=p,
                    a=a,
                    replicas=cfg.replicas,
                    mean_isd=value.mean,
                    stderr_isd=value.stderr,
                    mean_edges=edges.mean,
                    mean_deg=degree.mean,
                    approx_isd=dense_approximation(s, n, (n - 1) * p),
                    scaled_ratio=value.mean / n,
                    approx_ratio=approx_ratio,
                    rejections=cell.rejections,
                    sample_count=cell.count,
                    rejection_rate=rate,
                    untrusted=untrusted,
                    family=spec.family,
                )
            )
    return rows


@log_timing
def avg_inequality_check(
    cfg: EnsembleConfig, which: AveragedInequality, *, progress: bool = False
) -> list[InequalityRow]:
    """Evaluate one averaged inequality on every (p, a) cell of the sweep.

    Every exponent of ``cfg.a_grid`` must lie in the inequality's regime.
    Left and right sides are the ensemble means of their per-graph values
    (Eq4av and Eq5av use the expected edge count n (n - 1) p / 2 instead);
    the margin is the mean per-graph ``rhs - lhs``.

    Raises:
        RegimeViolation: an exponent lies outside the inequality's regime
    """
    config = _resolve_inequality(which)
    for a in cfg.a_grid:
        if not config.in_regime(a):
            raise RegimeViolation(config.name, a, config.regime)

    exponents = cfg.a_grid
    width = 2 * len(exponents)

    def measure(g: Graph) -> list[float]:
        out: list[float] = []
        for a in exponents:
            out.append(config.lhs(g, a) if config.lhs is not None else math.nan)
            out.append(config.rhs(g, a))
        return out

    cells = _collect_samples(cfg, measure, width, progress, desc=config.name)

    rows: list[InequalityRow] = []
    for p, cell in zip(cfg.p_grid, cells):
        for j, a in enumerate(exponents):
            rhs_samples = cell.values[:, 2 * j + 1]
            if config.expected_lhs is not None:
                lhs = config.expected_lhs(cfg.n, p)
                lhs_samples = np.full_like(rhs_samples, lhs)
            else:
                lhs_samples = cell.values[:, 2 * j]
                lhs = SampleSummary.from_values(lhs_samples).mean
            rhs = SampleSummary.from_values(rhs_samples).mean
            margin = SampleSummary.from_values(rhs_samples - lhs_samples)

            rows.append(
                InequalityRow(
                    inequality=config.name,
                    n=cfg.n,
                    p=p,
                    a=a,
                    lhs=lhs,
                    rhs=rhs,
                    margin=margin.mean,
                    stderr=margin.stderr,
                    relative_margin=margin.mean / abs(lhs) if lhs else math.nan,
                    sample_count=cell.count,
                    rejections=cell.rejections,
                )
            )

    violations = [row for row in rows if not row.holds()]
    if violations:
        worst = min(violations, key=lambda row: row.margin)
        logger.warning(
            "%s: %d cell(s) below -3 stderr, worst at p=%s a=%s (margin %.6g)",
            config.name,
            len(violations),
            worst.p,
            worst.a,
            worst.margin,
        )
    return rows
