"""Counting Cayley graphs over T_{8p}."""

from ._core import (
    ConsistencyError,
    automorphisms,
    burnside_count,
    circulant_orbit_count,
    count_report,
    cycle_index,
    cycle_types,
    element_order,
    evaluate_cycle_index,
    inverse,
    is_connected,
    multiply,
    n_circulant,
    n_connected,
    n_total,
    orbit_census,
    verify,
)

__all__ = [
    "ConsistencyError",
    "automorphisms",
    "burnside_count",
    "circulant_orbit_count",
    "count_report",
    "cycle_index",
    "cycle_types",
    "element_order",
    "evaluate_cycle_index",
    "inverse",
    "is_connected",
    "multiply",
    "n_circulant",
    "n_connected",
    "n_total",
    "orbit_census",
    "verify",
]
