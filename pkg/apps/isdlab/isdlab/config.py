"""
Configuration settings for the isdlab command line.
"""

from typing import Final

# cap on "--replicas auto", which would otherwise be ceil(10**7 / n)
DEFAULT_REPLICA_BUDGET: Final[int] = 2000

DEFAULT_OUTPUT_FORMAT: Final[str] = "csv"
DEFAULT_INDEX_SPEC: Final[str] = "isd"
DEFAULT_MIN_MEAN_DEGREE: Final[float] = 10.0

SWEEP_FILENAME: Final[str] = "sweep.csv"
CHECK_FILENAME_TEMPLATE: Final[str] = "check_{name}.csv"
ZIP_FILENAME: Final[str] = "sweep.zip"

LOG_LEVEL_ENV_VAR: Final[str] = "ISDLAB_LOG_LEVEL"
LOG_FORMAT: Final[str] = "[isdlab] %(levelname)s %(name)s: %(message)s"

EXIT_OK: Final[int] = 0
EXIT_VIOLATION: Final[int] = 1
EXIT_USAGE: Final[int] = 2
