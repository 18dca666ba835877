"""General-purpose helpers: timing logs, worker counts and number formatting."""

import logging
import math
import os
from functools import wraps
from time import perf_counter
from typing import Final

__all__ = [
    "FLOAT_SIGNIFICANT_DIGITS",
    "THREADS_ENV_VAR",
    "log_timing",
    "get_thread_count",
    "format_float",
]

logger = logging.getLogger(__name__)

FLOAT_SIGNIFICANT_DIGITS: Final[int] = 12
THREADS_ENV_VAR: Final[str] = "ISDLAB_THREADS"


#########################
##### Logging utils
#########################
def log_timing(func):
    """Decorator to log the wall time of long-running operations."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        t0 = perf_counter()
        result = func(*args, **kwargs)
        elapsed = perf_counter() - t0
        logging.getLogger(func.__module__).info("%s: %.2fs", func.__name__, elapsed)
        return result

    return wrapper


#########################
##### Concurrency utils
#########################
def get_thread_count() -> int:
    """
    Worker count for concurrent evaluation.

    ISDLAB_THREADS caps the count; it changes speed only, never results.
    """
    fallback = os.cpu_count() or 1
    raw = os.environ.get(THREADS_ENV_VAR)
    if not raw:
        return fallback
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r (not an integer)", THREADS_ENV_VAR, raw)
        return fallback
    return max(1, value)


#########################
##### Formatting utils
#########################
def format_float(value: float | None, digits: int = FLOAT_SIGNIFICANT_DIGITS) -> str:
    """Render a float with ``digits`` significant digits; None and NaN become ''."""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return ""
    return f"{value:.{digits}g}"
