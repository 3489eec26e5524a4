"""Anticlique counting, enumeration and search."""

from ._core import (
    ConfigError,
    Graph,
    GuardError,
    Row,
    all_max_anticliques,
    chromatic_number,
    core,
    enumerate_anticliques,
    fibonacci_number,
    independence_polynomial,
    max_anticlique,
    maximal_anticliques,
    oracle_matching,
    oracle_report,
    parse_graph,
    random_bipartite_graph,
    random_graph,
    standard_rows,
    threshold_search,
)

__all__ = [
    "ConfigError",
    "Graph",
    "GuardError",
    "Row",
    "all_max_anticliques",
    "chromatic_number",
    "core",
    "enumerate_anticliques",
    "fibonacci_number",
    "independence_polynomial",
    "max_anticlique",
    "maximal_anticliques",
    "oracle_matching",
    "oracle_report",
    "parse_graph",
    "random_bipartite_graph",
    "random_graph",
    "standard_rows",
    "threshold_search",
]
