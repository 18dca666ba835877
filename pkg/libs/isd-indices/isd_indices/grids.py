"""
Parameter grids for exponents and edge probabilities.

    start:stop:step     inclusive arithmetic range, e.g. -2:2:0.5
    start:stop:logN     N log-spaced points from start up to (not including) stop
    v1,v2,...           explicit values
"""

import math
from typing import Sequence

import numpy as np

from .errors import EmptyGrid, InvalidGrid

__all__ = [
    "GRID_DECIMALS",
    "inclusive_range",
    "log_grid",
    "parse_grid",
    "validate_grid",
]

# grid values are rounded so 0.1 steps land on the decimal values users type
GRID_DECIMALS = 12


def inclusive_range(start: float, stop: float, step: float) -> tuple[float, ...]:
    """``start, start + step, ...`` up to and including ``stop`` (within rounding)."""
    if step <= 0 or not math.isfinite(step):
        raise InvalidGrid(f"{start}:{stop}:{step}", "step must be a positive number")
    if stop < start:
        raise InvalidGrid(f"{start}:{stop}:{step}", "stop must not be below start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    values = np.round(start + step * np.arange(count), GRID_DECIMALS)
    return tuple(float(v) + 0.0 for v in values)


def log_grid(start: float, stop: float, points: int) -> tuple[float, ...]:
    """``points`` geometrically spaced values in ``[start, stop)``."""
    if points < 1:
        raise InvalidGrid(f"{start}:{stop}:log{points}", "needs at least one point")
    if not 0 < start < stop:
        raise InvalidGrid(f"{start}:{stop}:log{points}", "needs 0 < start < stop")
    values = np.geomspace(start, stop, points, endpoint=False)
    return tuple(float(v) for v in values)


def validate_grid(values: Sequence[float], name: str = "grid") -> tuple[float, ...]:
    """Require a non-empty, finite, strictly increasing grid."""
    if len(values) == 0:
        raise EmptyGrid(name)
    out = tuple(float(v) for v in values)
    if not all(math.isfinite(v) for v in out):
        raise InvalidGrid(",".join(map(str, out)), f"{name} values must be finite")
    if any(b <= a for a, b in zip(out, out[1:])):
        raise InvalidGrid(",".join(map(str, out)), f"{name} must be strictly increasing")
    return out


def parse_grid(text: str, name: str = "grid") -> tuple[float, ...]:
    """Parse a grid expression into a validated tuple of floats."""
    text = text.strip()
    if not text:
        raise EmptyGrid(name)

    if ":" in text:
        parts = [part.strip() for part in text.split(":")]
        if len(parts) != 3:
            raise InvalidGrid(text, "expected start:stop:step or start:stop:logN")
        try:
            start, stop = float(parts[0]), float(parts[1])
        except ValueError:
            raise InvalidGrid(text, "start and stop must be numbers")
        step_text = parts[2].lower()
        if step_text.startswith("log"):
            try:
                points = int(step_text[3:])
            except ValueError:
                raise InvalidGrid(text, f"'{parts[2]}' is not of the form logN")
            values = log_grid(start, stop, points)
        else:
            try:
                step = float(step_text)
            except ValueError:
                raise InvalidGrid(text, f"step '{parts[2]}' is not a number")
            values = inclusive_range(start, stop, step)
        return validate_grid(values, name)

    try:
        values = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise InvalidGrid(text, "values must be numbers")
    return validate_grid(values, name)
