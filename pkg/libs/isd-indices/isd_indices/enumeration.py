"""
Small named graphs and exhaustive enumeration of graphs up to seven vertices.
"""

import re
from typing import Iterator

import networkx as nx

from .graph import Graph

__all__ = [
    "ATLAS_MAX_ORDER",
    "atlas_graphs",
    "named_graph",
]

# networkx's graph atlas lists every graph up to isomorphism on 0..7 vertices
ATLAS_MAX_ORDER = 7

_NAMED_PATTERN = re.compile(r"^(?P<kind>[PCKS])(?P<a>\d+)(?:,(?P<b>\d+))?$")


def atlas_graphs(max_order: int = ATLAS_MAX_ORDER, connected_only: bool = True) -> Iterator[Graph]:
    """One Graph per isomorphism class on 2..max_order vertices without isolated vertices."""
    if not 2 <= max_order <= ATLAS_MAX_ORDER:
        raise ValueError(f"max_order must be in [2, {ATLAS_MAX_ORDER}], got {max_order}")
    for graph in nx.graph_atlas_g():
        order = graph.number_of_nodes()
        if order > max_order:
            break
        if order < 2 or any(d == 0 for _, d in graph.degree()):
            continue
        if connected_only and not nx.is_connected(graph):
            continue
        yield Graph.from_networkx(graph)


def named_graph(name: str) -> Graph:
    """
    Build a graph from a short name.

        P<k>      path on k vertices (k >= 2)
        C<k>      cycle on k vertices (k >= 3)
        K<k>      complete graph on k vertices (k >= 2)
        K<a>,<b>  complete bipartite graph (a, b >= 1)
        S<k>      star with k leaves, i.e. K1,k (k >= 1)
    """
    match = _NAMED_PATTERN.match(name.strip().upper().replace(" ", ""))
    if match is None:
        raise ValueError(f"unknown graph name '{name}' (expected e.g. P3, C4, K5, K2,3, S3)")
    kind, a, b = match["kind"], int(match["a"]), match["b"]

    if b is not None:
        if kind != "K":
            raise ValueError(f"only complete bipartite graphs take two sizes, got '{name}'")
        b = int(b)
        if a < 1 or b < 1:
            raise ValueError(f"complete bipartite sides must be non-empty, got '{name}'")
        return Graph.from_networkx(nx.complete_bipartite_graph(a, b))

    if kind == "P":
        if a < 2:
            raise ValueError(f"paths need at least 2 vertices, got '{name}'")
        return Graph.from_networkx(nx.path_graph(a))
    if kind == "C":
        if a < 3:
            raise ValueError(f"cycles need at least 3 vertices, got '{name}'")
        return Graph.from_networkx(nx.cycle_graph(a))
    if kind == "K":
        if a < 2:
            raise ValueError(f"complete graphs need at least 2 vertices, got '{name}'")
        return Graph.from_networkx(nx.complete_graph(a))
    if a < 1:
        raise ValueError(f"stars need at least one leaf, got '{name}'")
    return Graph.from_networkx(nx.star_graph(a))
