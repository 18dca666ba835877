"""
Degree-based topological indices.

Every edge index here has the shape sum over uv in E(G) of F(d_u, d_v) and is
computed by ``edge_sum``; vertex indices go through ``vertex_sum``. Both apply
``F`` to whole degree arrays and add the terms with a correctly rounded sum.
"""

import math
from dataclasses import dataclass, replace
from typing import Callable, Literal

import numpy as np

from .aggregations import compensated_sum
from .errors import NonFiniteTerm, UnknownIndexFamily, ZeroExponent
from .graph import Graph

__all__ = [
    "IndexFamily",
    "IndexFamilyConfig",
    "IndexSpec",
    "INDEX_FAMILIES",
    "degree_power",
    "edge_sum",
    "vertex_sum",
    "isd",
    "general_randic",
    "general_sum_connectivity",
    "geometric_arithmetic",
    "arithmetic_geometric",
    "variable_first_zagreb",
    "evaluate",
    "dense_approximation",
    "parse_index_spec",
    "parse_index_specs",
    "format_exponent",
]

IndexFamily = Literal["isd", "randic", "chi", "ga", "ag", "m1"]

DegreeFunction = Callable[[np.ndarray, np.ndarray], np.ndarray | float]


#########################
##### Summation engine
#########################
def degree_power(d: np.ndarray | float, a: float) -> np.ndarray:
    """d**a for positive d, as exp(a ln d) with a in {-1, 0, 1, 2} short-circuited."""
    d = np.asarray(d, dtype=np.float64)
    if a == 0:
        return np.ones_like(d)
    if a == 1:
        return d.copy()
    if a == 2:
        return d * d
    if a == -1:
        return 1.0 / d
    return np.exp(a * np.log(d))


def _apply(f: Callable, *args: np.ndarray) -> np.ndarray:
    """Apply ``f`` to degree arrays, falling back to per-element calls for scalar-only functions."""
    size = args[0].shape[0]
    with np.errstate(all="ignore"):
        try:
            terms = np.asarray(f(*args), dtype=np.float64)
        except TypeError:
            terms = np.fromiter(
                (f(*values) for values in zip(*(a.tolist() for a in args))),
                dtype=np.float64,
                count=size,
            )
    return np.broadcast_to(terms, (size,))


def edge_sum(g: Graph, f: DegreeFunction) -> float:
    """Sum ``f(d_u, d_v)`` over the edges of ``g`` in lexicographic edge order.

    ``f`` receives float degree arrays (one entry per edge) and should be
    symmetric; functions that only accept scalars are called once per edge.
    """
    du = g.degrees[g.edges[:, 0]].astype(np.float64)
    dv = g.degrees[g.edges[:, 1]].astype(np.float64)
    terms = _apply(f, du, dv)

    bad = np.flatnonzero(~np.isfinite(terms))
    if bad.size:
        u, v = g.edges[bad[0]].tolist()
        raise NonFiniteTerm(u, v, float(terms[bad[0]]))
    return compensated_sum(terms)


def vertex_sum(g: Graph, f: Callable[[np.ndarray], np.ndarray | float]) -> float:
    """Sum ``f(d_u)`` over the vertices of ``g``."""
    terms = _apply(f, g.degrees.astype(np.float64))
    bad = np.flatnonzero(~np.isfinite(terms))
    if bad.size:
        u = int(bad[0])
        raise NonFiniteTerm(u, u, float(terms[u]))
    return compensated_sum(terms)


#########################
##### Indices
#########################
def isd(g: Graph, a: float) -> float:
    """Variable inverse sum deg index, sum of 1 / (d_u^a + d_v^a). ISD_-1 is ISI."""
    return edge_sum(g, lambda x, y: 1.0 / (degree_power(x, a) + degree_power(y, a)))


def general_randic(g: Graph, alpha: float) -> float:
    """General Randic index, sum of (d_u d_v)^alpha, defined for alpha != 0."""
    if alpha == 0:
        raise ZeroExponent("general Randic index")
    return edge_sum(g, lambda x, y: degree_power(x * y, alpha))


def general_sum_connectivity(g: Graph, alpha: float) -> float:
    """General sum-connectivity index, sum of (d_u + d_v)^alpha."""
    return edge_sum(g, lambda x, y: degree_power(x + y, alpha))


def geometric_arithmetic(g: Graph) -> float:
    return edge_sum(g, lambda x, y: 2.0 * np.sqrt(x * y) / (x + y))


def arithmetic_geometric(g: Graph) -> float:
    return edge_sum(g, lambda x, y: (x + y) / (2.0 * np.sqrt(x * y)))


def variable_first_zagreb(g: Graph, alpha: float) -> float:
    """Variable first Zagreb index, sum over vertices of d_u^alpha."""
    return vertex_sum(g, lambda d: degree_power(d, alpha))


#########################
##### Family registry
#########################
def _dense_edges(n: int, mean_degree: float) -> float:
    return n * mean_degree / 2.0


@dataclass(frozen=True)
class IndexFamilyConfig:
    """
    Everything the library knows about one index family.

    Args:
        name: short serialized name, e.g. "isd"
        display_name: long name used in messages
        takes_exponent: whether the family has a real exponent parameter
        compute: (graph, exponent) -> value
        approximate: (n, mean_degree, exponent) -> value when every degree
            equals the mean degree
    """

    name: IndexFamily
    display_name: str
    takes_exponent: bool
    compute: Callable[[Graph, float | None], float]
    approximate: Callable[[int, float, float | None], float]


INDEX_FAMILIES: dict[str, IndexFamilyConfig] = {
    "isd": IndexFamilyConfig(
        name="isd",
        display_name="variable inverse sum deg index",
        takes_exponent=True,
        compute=isd,
        approximate=lambda n, d, a: (n / 4.0) * d ** (1.0 - a),
    ),
    "randic": IndexFamilyConfig(
        name="randic",
        display_name="general Randic index",
        takes_exponent=True,
        compute=general_randic,
        approximate=lambda n, d, a: _dense_edges(n, d) * d ** (2.0 * a),
    ),
    "chi": IndexFamilyConfig(
        name="chi",
        display_name="general sum-connectivity index",
        takes_exponent=True,
        compute=general_sum_connectivity,
        approximate=lambda n, d, a: _dense_edges(n, d) * (2.0 * d) ** a,
    ),
    "ga": IndexFamilyConfig(
        name="ga",
        display_name="geometric-arithmetic index",
        takes_exponent=False,
        compute=lambda g, _: geometric_arithmetic(g),
        approximate=lambda n, d, _: _dense_edges(n, d),
    ),
    "ag": IndexFamilyConfig(
        name="ag",
        display_name="arithmetic-geometric index",
        takes_exponent=False,
        compute=lambda g, _: arithmetic_geometric(g),
        approximate=lambda n, d, _: _dense_edges(n, d),
    ),
    "m1": IndexFamilyConfig(
        name="m1",
        display_name="variable first Zagreb index",
        takes_exponent=True,
        compute=variable_first_zagreb,
        approximate=lambda n, d, a: n * d**a,
    ),
}

_FAMILY_ALIASES: dict[str, str] = {
    "isd": "isd",
    "randic": "randic",
    "generalrandic": "randic",
    "r": "randic",
    "chi": "chi",
    "generalsumconnectivity": "chi",
    "ga": "ga",
    "ag": "ag",
    "m1": "m1",
    "variablefirstzagreb": "m1",
}


def format_exponent(a: float) -> str:
    return f"{a:.12g}"


@dataclass(frozen=True)
class IndexSpec:
    """An index family plus its exponent; GA and AG carry no exponent.

    Serialized as ``family[:exponent]``, e.g. ``isd:-1.5``, ``ga``, ``m1:2``.
    """

    family: IndexFamily
    exponent: float | None = None

    def __post_init__(self):
        config = INDEX_FAMILIES.get(self.family)
        if config is None:
            raise UnknownIndexFamily(self.family)
        if not config.takes_exponent:
            if self.exponent is not None:
                raise ValueError(f"{config.display_name} takes no exponent")
            return
        if self.exponent is None:
            raise ValueError(f"{config.display_name} needs an exponent, e.g. {self.family}:1")
        if not math.isfinite(self.exponent):
            raise ValueError(f"exponent must be finite, got {self.exponent}")
        if self.family == "randic" and self.exponent == 0:
            raise ZeroExponent(config.display_name)

    @property
    def config(self) -> IndexFamilyConfig:
        return INDEX_FAMILIES[self.family]

    @property
    def label(self) -> str:
        if self.exponent is None:
            return self.family
        return f"{self.family}:{format_exponent(self.exponent)}"

    def with_exponent(self, a: float | None) -> "IndexSpec":
        """Same family at exponent ``a``; exponent-free families ignore ``a``."""
        if not self.config.takes_exponent:
            return self
        return replace(self, exponent=float(a))

    def __str__(self) -> str:
        return self.label


def evaluate(spec: IndexSpec, g: Graph) -> float:
    return spec.config.compute(g, spec.exponent)


def dense_approximation(spec: IndexSpec, n: int, mean_degree: float) -> float:
    """Index value when d_u = d_v = mean_degree for every edge, with m = n * mean_degree / 2.

    For ISD_a this is (n / 4) * mean_degree^(1 - a).
    """
    return float(spec.config.approximate(n, mean_degree, spec.exponent))


def parse_index_spec(text: str, default_exponent: float | None = None) -> IndexSpec:
    """Parse ``family[:exponent]``; family names are case-insensitive.

    A bare family that takes an exponent gets ``default_exponent`` when one is
    given, so ``isd`` can stand for a whole exponent sweep.
    """
    family_text, _, exponent_text = text.strip().partition(":")
    family = _FAMILY_ALIASES.get(family_text.strip().lower().replace("_", ""))
    if family is None:
        raise UnknownIndexFamily(family_text)
    if not exponent_text.strip():
        if default_exponent is not None and INDEX_FAMILIES[family].takes_exponent:
            return IndexSpec(family, float(default_exponent))  # type: ignore[arg-type]
        return IndexSpec(family)  # type: ignore[arg-type]
    try:
        exponent = float(exponent_text)
    except ValueError:
        raise ValueError(f"invalid exponent '{exponent_text}' in '{text}'")
    return IndexSpec(family, exponent)  # type: ignore[arg-type]


def parse_index_specs(text: str) -> list[IndexSpec]:
    """Parse a comma-separated list such as ``isd:-1,ga,m1:2``."""
    return [parse_index_spec(part) for part in text.split(",") if part.strip()]
