"""
Inequalities bounding the variable inverse sum deg index.

Each theorem is registered in ``THEOREMS`` with an applicability predicate over
the exponent ``a`` and a function producing both sides and the bounded value
for a concrete graph. ``check_bound`` turns that into a ``BoundReport`` with
slack, validity and equality flags, and the extremal class the theorem predicts
for equality next to the class the graph actually has.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Final, Literal, Sequence

from .aggregations import compensated_sum
from .errors import EmptyGrid, ExponentOutOfRange, UnknownTheorem
from .graph import ExtremalClass, ExtremalTag, Graph, classify_extremal
from .indices import (
    arithmetic_geometric,
    general_randic,
    general_sum_connectivity,
    geometric_arithmetic,
    isd,
    variable_first_zagreb,
)
from .utils import log_timing

__all__ = [
    "EQUALITY_TOLERANCE",
    "TheoremId",
    "TheoremConfig",
    "BoundSides",
    "BoundReport",
    "THEOREMS",
    "BOUND_REPORT_COLUMNS",
    "check_bound",
    "verify_all",
    "cauchy_schwarz_converse_gap",
]

logger = logging.getLogger(__name__)

EQUALITY_TOLERANCE: Final[float] = 1e-9

TheoremId = Literal[
    "P1_EdgeBound",
    "T2_RandicRelation",
    "T3_NegatedExponent",
    "T4_ChiRelation",
    "T5_GALower",
    "T6_AGUpper",
    "T7_M1Sum",
    "T8_M1SumDeltaRefined",
    "T9_M1SumDeltaUpper",
    "T10_M1Product",
]


##############################
##### Structures
##############################
@dataclass(frozen=True)
class BoundSides:
    """
    Both sides of one theorem instance.

    Args:
        value: the bounded quantity
        lower, upper: bound sides, None when the theorem gives no such side
        strict_lower, strict_upper: the side is a strict inequality
        class_lower, class_upper: extremal class for which the theorem states
            equality on that side (None when no equality case is stated)
        converse_asserted: the theorem states "equality only if" as well as "if"
    """

    value: float
    lower: float | None = None
    upper: float | None = None
    strict_lower: bool = False
    strict_upper: bool = False
    class_lower: ExtremalTag | None = None
    class_upper: ExtremalTag | None = None
    converse_asserted: bool = True


@dataclass(frozen=True)
class TheoremConfig:
    """
    Registry entry for one theorem.

    Args:
        theorem: identifier
        hypothesis: human-readable domain of ``a``
        applies: (graph, a) -> whether the theorem's hypothesis admits this pair
        sides: (graph, a) -> BoundSides, only called when ``applies`` is true
    """

    theorem: TheoremId
    hypothesis: str
    applies: Callable[[Graph, float], bool]
    sides: Callable[[Graph, float], BoundSides]


@dataclass(frozen=True)
class BoundReport:
    """One theorem evaluated on one (graph, a) pair."""

    theorem: TheoremId
    a: float
    applicable: bool
    value: float
    lower: float | None
    upper: float | None
    slack_lower: float | None
    slack_upper: float | None
    equality_lower: bool
    equality_upper: bool
    holds: bool
    strict_lower: bool
    strict_upper: bool
    strict_holds: bool | None
    predicted_class_lower: ExtremalTag | None
    predicted_class_upper: ExtremalTag | None
    actual_class: ExtremalClass
    converse_asserted: bool

    @property
    def predicted_equality_class(self) -> str:
        """Predicted classes as ``lower|upper``; an empty part means no stated equality case."""
        return f"{self.predicted_class_lower or ''}|{self.predicted_class_upper or ''}"

    def as_row(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "a": self.a,
            "applicable": self.applicable,
            "lower": self.lower,
            "value": self.value if self.applicable else None,
            "upper": self.upper,
            "slack_lower": self.slack_lower,
            "slack_upper": self.slack_upper,
            "equality_lower": self.equality_lower,
            "equality_upper": self.equality_upper,
            "holds": self.holds,
            "predicted_class": self.predicted_equality_class if self.applicable else "",
            "actual_class": str(self.actual_class),
            "strict_holds": self.strict_holds,
            "converse_asserted": self.converse_asserted,
        }


BOUND_REPORT_COLUMNS: Final[list[str]] = [
    "theorem",
    "a",
    "applicable",
    "lower",
    "value",
    "upper",
    "slack_lower",
    "slack_upper",
    "equality_lower",
    "equality_upper",
    "holds",
    "predicted_class",
    "actual_class",
    "strict_holds",
    "converse_asserted",
]


##############################
##### Theorem sides
##############################
def _nonzero(g: Graph, a: float) -> bool:
    return a != 0


def _isd_plus_m1(g: Graph, a: float) -> float:
    return isd(g, a) + variable_first_zagreb(g, a + 1)


def _edge_bound_sides(g: Graph, a: float) -> BoundSides:
    m, d, D = g.m, g.min_degree, g.max_degree
    low, high = m / (2 * D**a), m / (2 * d**a)
    if a < 0:
        low, high = high, low
    return BoundSides(isd(g, a), low, high, class_lower="Regular", class_upper="Regular")


def _randic_sides(g: Graph, a: float) -> BoundSides:
    r = general_randic(g, -a)
    d, D = g.min_degree, g.max_degree
    low, high = 0.5 * d**a * r, 0.5 * D**a * r
    if a < 0:
        low, high = high, low
    return BoundSides(isd(g, a), low, high, class_lower="Regular", class_upper="Regular")


def _negated_exponent_sides(g: Graph, a: float) -> BoundSides:
    negated = isd(g, -a)
    d, D = g.min_degree, g.max_degree
    low, high = D ** (-2 * a) * negated, d ** (-2 * a) * negated
    if a < 0:
        low, high = high, low
    return BoundSides(isd(g, a), low, high, class_lower="Regular", class_upper="Regular")


def _chi_sides(g: Graph, a: float) -> BoundSides:
    chi = general_sum_connectivity(g, -a)
    scaled = 2 ** (a - 1) * chi
    value = isd(g, a)
    if a > 1:
        return BoundSides(
            value, chi, scaled, strict_lower=True, class_upper="ComponentwiseRegular"
        )
    if a > 0:
        return BoundSides(
            value, scaled, chi, strict_upper=True, class_lower="ComponentwiseRegular"
        )
    return BoundSides(value, upper=scaled, class_upper="ComponentwiseRegular")


def _ga_sides(g: Graph, a: float) -> BoundSides:
    degree = g.max_degree if a > 0 else g.min_degree
    low = 0.5 * degree ** (-a) * geometric_arithmetic(g)
    return BoundSides(isd(g, a), lower=low, class_lower="Regular")


def _ag_sides(g: Graph, a: float) -> BoundSides:
    degree = g.min_degree if a > 0 else g.max_degree
    high = 0.5 * degree ** (-a) * arithmetic_geometric(g)
    return BoundSides(isd(g, a), upper=high, class_upper="Regular")


def _m1_sum_sides(g: Graph, a: float) -> BoundSides:
    if a > 0:
        return BoundSides(_isd_plus_m1(g, a), lower=2.5 * g.m, class_lower="UnionOfP2")
    return BoundSides(_isd_plus_m1(g, a), lower=2.0 * g.m, converse_asserted=False)


def _delta_refined_applies(g: Graph, a: float) -> bool:
    d = g.min_degree
    return a > 0 or (d > 1 and a <= -math.log(2) / math.log(d))


def _delta_refined_sides(g: Graph, a: float) -> BoundSides:
    t = 2 * g.min_degree**a
    return BoundSides(_isd_plus_m1(g, a), lower=(t + 1 / t) * g.m, class_lower="Regular")


def _Delta_upper_sides(g: Graph, a: float) -> BoundSides:
    t = 2 * g.max_degree**a
    return BoundSides(_isd_plus_m1(g, a), upper=(t + 1 / t) * g.m, class_upper="Regular")


def _m1_product_sides(g: Graph, a: float) -> BoundSides:
    m = g.m
    Da, da = g.max_degree**a, g.min_degree**a
    return BoundSides(
        isd(g, a) * variable_first_zagreb(g, a + 1),
        lower=float(m * m),
        upper=(Da + da) ** 2 / (4 * Da * da) * m * m,
        class_lower="RegularOrBiregularComponents",
        class_upper="Regular",
        # "only if" for the lower side is proved for connected graphs only
        converse_asserted=g.is_connected(),
    )


THEOREMS: dict[str, TheoremConfig] = {
    "P1_EdgeBound": TheoremConfig(
        "P1_EdgeBound", "a != 0", _nonzero, _edge_bound_sides
    ),
    "T2_RandicRelation": TheoremConfig(
        "T2_RandicRelation", "a != 0", _nonzero, _randic_sides
    ),
    "T3_NegatedExponent": TheoremConfig(
        "T3_NegatedExponent", "a != 0", _nonzero, _negated_exponent_sides
    ),
    "T4_ChiRelation": TheoremConfig(
        "T4_ChiRelation",
        "a not in {0, 1}",
        lambda g, a: a not in (0, 1),
        _chi_sides,
    ),
    "T5_GALower": TheoremConfig("T5_GALower", "a != 0", _nonzero, _ga_sides),
    "T6_AGUpper": TheoremConfig("T6_AGUpper", "a != 0", _nonzero, _ag_sides),
    "T7_M1Sum": TheoremConfig("T7_M1Sum", "a != 0", _nonzero, _m1_sum_sides),
    "T8_M1SumDeltaRefined": TheoremConfig(
        "T8_M1SumDeltaRefined",
        "a > 0, or delta > 1 and a <= -log 2 / log delta",
        _delta_refined_applies,
        _delta_refined_sides,
    ),
    "T9_M1SumDeltaUpper": TheoremConfig(
        "T9_M1SumDeltaUpper", "a > 0", lambda g, a: a > 0, _Delta_upper_sides
    ),
    "T10_M1Product": TheoremConfig(
        "T10_M1Product", "a != 0", _nonzero, _m1_product_sides
    ),
}


##############################
##### Evaluation
##############################
def _resolve_theorem(theorem: str) -> TheoremConfig:
    config = THEOREMS.get(theorem)
    if config is None:
        raise UnknownTheorem(theorem)
    return config


def check_bound(
    theorem: TheoremId,
    g: Graph,
    a: float,
    *,
    tolerance: float = EQUALITY_TOLERANCE,
    actual_class: ExtremalClass | None = None,
) -> BoundReport:
    """Evaluate one theorem on ``(g, a)``.

    Sides within ``tolerance * max(1, |value|)`` of the value count as equal;
    ``holds`` allows the same tolerance. Strict sides are additionally checked
    without tolerance and reported through ``strict_holds``. Exponents large
    enough to push a side past double range raise ``ExponentOutOfRange``.
    """
    config = _resolve_theorem(theorem)
    a = float(a)
    if not math.isfinite(a):
        raise ValueError(f"exponent must be finite, got {a}")
    if actual_class is None:
        actual_class = classify_extremal(g)

    if not config.applies(g, a):
        logger.debug("%s not applicable at a=%s", theorem, a)
        return BoundReport(
            theorem=config.theorem,
            a=a,
            applicable=False,
            value=math.nan,
            lower=None,
            upper=None,
            slack_lower=None,
            slack_upper=None,
            equality_lower=False,
            equality_upper=False,
            holds=True,
            strict_lower=False,
            strict_upper=False,
            strict_holds=None,
            predicted_class_lower=None,
            predicted_class_upper=None,
            actual_class=actual_class,
            converse_asserted=False,
        )

    try:
        sides = config.sides(g, a)
    except (OverflowError, ZeroDivisionError) as exc:
        raise ExponentOutOfRange(config.theorem, a) from exc
    if not all(
        math.isfinite(x) for x in (sides.value, sides.lower, sides.upper) if x is not None
    ):
        raise ExponentOutOfRange(config.theorem, a)
    value = sides.value
    scale = tolerance * max(1.0, abs(value))

    slack_lower = value - sides.lower if sides.lower is not None else None
    slack_upper = sides.upper - value if sides.upper is not None else None
    slacks = [s for s in (slack_lower, slack_upper) if s is not None]

    strict_slacks = [
        s
        for s, strict in ((slack_lower, sides.strict_lower), (slack_upper, sides.strict_upper))
        if strict and s is not None
    ]

    return BoundReport(
        theorem=config.theorem,
        a=a,
        applicable=True,
        value=value,
        lower=sides.lower,
        upper=sides.upper,
        slack_lower=slack_lower,
        slack_upper=slack_upper,
        equality_lower=slack_lower is not None and abs(slack_lower) <= scale,
        equality_upper=slack_upper is not None and abs(slack_upper) <= scale,
        holds=all(s >= -scale for s in slacks),
        strict_lower=sides.strict_lower,
        strict_upper=sides.strict_upper,
        strict_holds=all(s > 0 for s in strict_slacks) if strict_slacks else None,
        predicted_class_lower=sides.class_lower,
        predicted_class_upper=sides.class_upper,
        actual_class=actual_class,
        converse_asserted=sides.converse_asserted,
    )


@log_timing
def verify_all(
    g: Graph,
    a_grid: Sequence[float],
    *,
    tolerance: float = EQUALITY_TOLERANCE,
    max_workers: int | None = None,
) -> list[BoundReport]:
    """Every theorem at every grid point, theorem-major and a-minor.

    With ``max_workers > 1`` cells are evaluated on a thread pool; ``map``
    keeps the output identical to sequential evaluation.
    """
    if len(a_grid) == 0:
        raise EmptyGrid("a_grid")

    actual_class = classify_extremal(g)
    cells = [(theorem, float(a)) for theorem in THEOREMS for a in a_grid]

    def run(cell: tuple[str, float]) -> BoundReport:
        theorem, a = cell
        return check_bound(theorem, g, a, tolerance=tolerance, actual_class=actual_class)  # type: ignore[arg-type]

    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            reports = list(pool.map(run, cells))
    else:
        reports = [run(cell) for cell in cells]

    failures = [r for r in reports if r.applicable and not r.holds]
    if failures:
        logger.warning("%d applicable bound(s) violated on %r", len(failures), g)
    return reports


def cauchy_schwarz_converse_gap(
    a_values: Sequence[float], b_values: Sequence[float]
) -> tuple[float, float]:
    """Both sides of the converse Cauchy-Schwarz inequality.

    With b_j > 0 and omega = min a_j / b_j, Omega = max a_j / b_j, returns
    ``(sqrt(sum a^2) * sqrt(sum b^2), (sqrt(Omega/omega) + sqrt(omega/Omega)) / 2 * sum a b)``;
    the first never exceeds the second.
    """
    if len(a_values) != len(b_values) or len(a_values) == 0:
        raise ValueError("sequences must be non-empty and of equal length")
    if any(b <= 0 for b in b_values) or any(x <= 0 for x in a_values):
        raise ValueError("sequences must be positive")
    ratios = [x / y for x, y in zip(a_values, b_values)]
    omega, Omega = min(ratios), max(ratios)
    lhs = math.sqrt(compensated_sum(x * x for x in a_values)) * math.sqrt(
        compensated_sum(y * y for y in b_values)
    )
    factor = 0.5 * (math.sqrt(Omega / omega) + math.sqrt(omega / Omega))
    rhs = factor * compensated_sum(x * y for x, y in zip(a_values, b_values))
    return lhs, rhs
