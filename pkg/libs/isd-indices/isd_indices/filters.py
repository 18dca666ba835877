"""
Generic filter configuration and SQL condition building.

Provides a declarative way to define filters over result tables and generate
SQL WHERE clauses from a plain dict of filter values.
"""

import math
from dataclasses import dataclass
from typing import Any, Callable

__all__ = [
    "FilterType",
    "FilterConfig",
    "FilterRegistry",
    "FILTER_TYPES",
    "resolve_filter_type",
]


##############################
##### Filter helpers
##############################
def resolve_filter_type(filter_config: "FilterConfig") -> "FilterType":
    """Resolve filter_type from string (registry lookup) or direct FilterType object."""
    if isinstance(filter_config.filter_type, str):
        return FILTER_TYPES[filter_config.filter_type]
    return filter_config.filter_type


def _default_display_formatter(value: Any) -> str:
    if value is None or value == "all":
        return "all"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value) if value else "none"
    return str(value)


##############################
##### Filter structures
##############################
@dataclass
class FilterType:
    """
    Encapsulation of the logic for building SQL conditions.

    Args:
        name: Name of the filter type
        build_condition: Function that builds the SQL condition from the field name and value
        default_value: Value meaning "no filter"
    """

    name: str
    build_condition: Callable[[str, Any], str | None]
    default_value: Any


@dataclass
class FilterConfig:
    """
    Mapping between a filter value and an SQL WHERE condition.

    Args:
        filter_key: Key in the filters dict (e.g., "min_mean_degree")
        field_name: SQL field or expression (e.g., "mean_deg")
        filter_type: Name of filter type, or custom FilterType object
        display_name: Optional label used when describing active filters
    """

    filter_key: str
    field_name: str
    filter_type: str | FilterType
    display_name: str | None = None


class FilterRegistry:
    """Named groups of filter configurations, one group per table."""

    def __init__(self, groups: dict[str, list[FilterConfig]] | None = None):
        self._groups: dict[str, list[FilterConfig]] = groups or {}

    def get_group(self, name: str) -> list[FilterConfig] | None:
        return self._groups.get(name)

    def get_all_defaults(self) -> dict[str, Any]:
        """Default values for all registered filters across all groups."""
        defaults = {}
        for configs in self._groups.values():
            for filter_config in configs:
                defaults[filter_config.filter_key] = resolve_filter_type(filter_config).default_value
        return defaults

    def format_display(self, filters: dict[str, Any]) -> list[str]:
        """Describe the non-default filters as ``name: value`` lines."""
        defaults = self.get_all_defaults()
        lookup = {
            config.filter_key: config
            for configs in self._groups.values()
            for config in configs
        }

        lines = []
        for key, value in sorted(filters.items()):
            if value is None or value == defaults.get(key):
                continue
            config = lookup.get(key)
            name = config.display_name if config and config.display_name else key.replace("_", " ")
            lines.append(f"{name}: {_default_display_formatter(value)}")
        return lines


##############################
##### The filters themselves
##############################
def _format_sql_value(v: Any) -> str:
    """Format a python value for a SQL condition (quoting strings, escaping)."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, float)):
        return repr(float(v)) if isinstance(v, float) else str(v)
    escaped = str(v).replace("'", "''")
    return f"'{escaped}'"


def _categorical_condition(field: str, value: Any) -> str | None:
    if value is not None and value != "all":
        return f"{field} = {_format_sql_value(value)}"
    return None


# tolerance for matching floats read back from 12-significant-digit text
_NUMERIC_MATCH_TOLERANCE = 1e-9


def _numeric_list_condition(field: str, value: Any) -> str | None:
    """Match any of the given numbers up to a small absolute tolerance."""
    if value is None or value == "all":
        return None
    values = list(value) if isinstance(value, (list, tuple)) else [value]
    if not values:
        return None
    conditions = [
        f"{field} IS NULL"
        if isinstance(v, float) and math.isnan(v)
        else f"abs({field} - {_format_sql_value(float(v))}) <= {_NUMERIC_MATCH_TOLERANCE}"
        for v in values
    ]
    return f"({' OR '.join(conditions)})"


def _bound_condition(operator: str) -> Callable[[str, Any], str | None]:
    def build(field: str, value: Any) -> str | None:
        if value is None or (isinstance(value, float) and not math.isfinite(value)):
            return None
        return f"{field} {operator} {_format_sql_value(value)}"

    return build


# Filter logic can be defined in a lambda here, in a helper function above,
# or in a custom FilterType object within an app
FILTER_TYPES: dict[str, FilterType] = {
    "boolean": FilterType(
        name="boolean",
        build_condition=lambda field, value: f"{field} = true" if value else None,
        default_value=False,
    ),
    "categorical": FilterType(
        name="categorical",
        build_condition=_categorical_condition,
        default_value="all",
    ),
    "numeric_list": FilterType(
        name="numeric_list",
        build_condition=_numeric_list_condition,
        default_value="all",
    ),
    "gte": FilterType(
        name="gte",
        build_condition=_bound_condition(">="),
        default_value=None,
    ),
    "lte": FilterType(
        name="lte",
        build_condition=_bound_condition("<="),
        default_value=None,
    ),
}
