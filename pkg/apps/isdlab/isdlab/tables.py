"""
Table class definitions for isdlab result files.

Defines relation classes that bind the sweep schema to its filters.
"""

from typing import Final

from isd_indices import (
    DuckCsvRelation,
    FilterConfig,
    FilterRegistry,
    SweepRow,
    load_sweep_rows,
)

FILTER_REGISTRY: Final[FilterRegistry] = FilterRegistry(
    {
        "sweep": [
            FilterConfig("family", "family", "categorical", display_name="index family"),
            FilterConfig("a", "a", "numeric_list", display_name="exponent"),
            FilterConfig("min_mean_degree", "mean_deg", "gte", display_name="mean degree >="),
            FilterConfig("max_mean_degree", "mean_deg", "lte", display_name="mean degree <="),
            FilterConfig("trusted_only", "(NOT untrusted)", "boolean"),
        ],
    }
)


class SweepRelation(DuckCsvRelation):
    _filter_configs = FILTER_REGISTRY.get_group("sweep")

    def sizes(self) -> list[int]:
        """Distinct graph sizes in the selected rows."""
        return sorted(int(n) for n in self.distinct("n"))

    def rows(self) -> list[SweepRow]:
        return load_sweep_rows(self)
