"""
Erdos-Renyi G(n, p) sampling.

Every replica owns a counter-based Philox stream keyed by ``(seed, replica)``,
so a replica's graph never depends on which worker drew it or in what order.
"""

import logging
import math
from functools import lru_cache
from typing import Final

import numpy as np

from .errors import DegenerateSample, InvalidConfig
from .graph import Graph

__all__ = [
    "MAX_SAMPLE_ATTEMPTS",
    "SAMPLE_BUDGET",
    "replica_stream",
    "er_sample",
    "er_sample_counted",
    "default_replicas",
]

logger = logging.getLogger(__name__)

MAX_SAMPLE_ATTEMPTS: Final[int] = 100
# total number of graphs per (n, p) point is SAMPLE_BUDGET / n
SAMPLE_BUDGET: Final[int] = 10**7

_SEED_MASK = (1 << 64) - 1


def replica_stream(seed: int, replica: int) -> np.random.Generator:
    """Independent random stream for one replica of a seeded experiment."""
    if replica < 0:
        raise ValueError(f"replica index must be non-negative, got {replica}")
    sequence = np.random.SeedSequence([int(seed) & _SEED_MASK, int(replica)])
    return np.random.Generator(np.random.Philox(sequence))


@lru_cache(maxsize=8)
def _vertex_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    # row-major upper triangle, i.e. pairs in lexicographic order
    us, vs = np.triu_indices(n, k=1)
    us.setflags(write=False)
    vs.setflags(write=False)
    return us, vs


def _check_parameters(n: int, p: float, max_attempts: int) -> None:
    if int(n) != n or n < 2:
        raise InvalidConfig(f"G(n, p) needs n >= 2, got n = {n}")
    if not 0 < p < 1:
        raise InvalidConfig(f"G(n, p) needs 0 < p < 1, got p = {p}")
    if max_attempts < 1:
        raise InvalidConfig(f"max_attempts must be positive, got {max_attempts}")


def er_sample_counted(
    n: int,
    p: float,
    rng: np.random.Generator,
    max_attempts: int = MAX_SAMPLE_ATTEMPTS,
) -> tuple[Graph, int]:
    """Draw G(n, p) conditioned on having no isolated vertex.

    Each attempt draws one uniform per vertex pair and keeps the pairs below
    ``p``; attempts with an isolated vertex are discarded and redrawn from the
    same stream. Returns the graph and the number of discarded attempts.

    Raises:
        DegenerateSample: every one of ``max_attempts`` attempts was rejected
    """
    _check_parameters(n, p, max_attempts)
    us, vs = _vertex_pairs(int(n))

    for attempt in range(max_attempts):
        keep = rng.random(us.shape[0]) < p
        su, sv = us[keep], vs[keep]
        degrees = np.bincount(su, minlength=n) + np.bincount(sv, minlength=n)
        if degrees.min() > 0:
            edges = np.column_stack([su, sv]).astype(np.int64)
            return Graph(n, edges, degrees.astype(np.int64)), attempt

    logger.debug("G(%d, %s): %d attempts all had isolated vertices", n, p, max_attempts)
    raise DegenerateSample(n, p, max_attempts)


def er_sample(
    n: int,
    p: float,
    rng: np.random.Generator,
    max_attempts: int = MAX_SAMPLE_ATTEMPTS,
) -> Graph:
    """Draw G(n, p) without isolated vertices; see ``er_sample_counted``."""
    graph, _ = er_sample_counted(n, p, rng, max_attempts)
    return graph


def default_replicas(n: int, budget: int | None = None) -> int:
    """ceil(10**7 / n) replicas, capped at ``budget`` when given."""
    replicas = math.ceil(SAMPLE_BUDGET / n)
    if budget is not None:
        if budget < 1:
            raise InvalidConfig(f"replica budget must be positive, got {budget}")
        replicas = min(replicas, budget)
    return replicas
