"""Compensated sums and sample statistics.

``math.fsum`` returns the correctly rounded sum of its inputs, so every
aggregate here is independent of the order in which terms or replicas arrive.
"""

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

__all__ = [
    "compensated_sum",
    "SampleSummary",
    "summarize_columns",
]


def compensated_sum(values: Iterable[float] | np.ndarray) -> float:
    """Correctly rounded sum of ``values``."""
    if isinstance(values, np.ndarray):
        values = values.ravel().tolist()
    return math.fsum(values)


@dataclass(frozen=True)
class SampleSummary:
    """Mean and standard error of a sample.

    Args:
        mean: arithmetic mean (NaN for an empty sample)
        stderr: sample standard deviation (unbiased variance) over sqrt(count);
            NaN with fewer than two values
        count: number of values
    """

    mean: float
    stderr: float
    count: int

    @classmethod
    def from_values(cls, values: Iterable[float] | np.ndarray) -> "SampleSummary":
        if not isinstance(values, np.ndarray):
            values = list(values)
        data = np.asarray(values, dtype=np.float64).ravel()
        count = int(data.size)
        if count == 0:
            return cls(math.nan, math.nan, 0)
        mean = compensated_sum(data) / count
        if count < 2:
            return cls(mean, math.nan, count)
        variance = compensated_sum((data - mean) ** 2) / (count - 1)
        return cls(mean, math.sqrt(variance / count), count)


def summarize_columns(samples: np.ndarray) -> list[SampleSummary]:
    """Summaries of each column of a (replicas, k) array."""
    samples = np.asarray(samples, dtype=np.float64)
    if samples.ndim == 1:
        samples = samples[:, None]
    return [SampleSummary.from_values(samples[:, j]) for j in range(samples.shape[1])]
