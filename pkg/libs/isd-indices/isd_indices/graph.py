"""
Immutable simple graphs with cached degrees.

Vertices are dense 0-based integers. Each edge is stored once as a (min, max)
pair and the edge array is kept in lexicographic order, so every edge sum
visits its terms in the same order on every run.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable, Literal, Sequence

import networkx as nx
import numpy as np

from .errors import DuplicateEdge, IsolatedVertex, SelfLoop, VertexOutOfRange

__all__ = [
    "ExtremalTag",
    "ExtremalClass",
    "Graph",
    "from_edge_list",
    "degree_extremes",
    "connected_components",
    "classify_extremal",
]

logger = logging.getLogger(__name__)

ExtremalTag = Literal[
    "UnionOfP2",
    "Regular",
    "Biregular",
    "ComponentwiseRegular",
    "RegularOrBiregularComponents",
    "None",
]

# Every tag implies itself plus the weaker tags listed here.
_TAG_IMPLICATIONS: dict[str, frozenset[str]] = {
    "UnionOfP2": frozenset(
        {"UnionOfP2", "Regular", "ComponentwiseRegular", "RegularOrBiregularComponents"}
    ),
    "Regular": frozenset(
        {"Regular", "ComponentwiseRegular", "RegularOrBiregularComponents"}
    ),
    "Biregular": frozenset({"Biregular", "RegularOrBiregularComponents"}),
    "ComponentwiseRegular": frozenset(
        {"ComponentwiseRegular", "RegularOrBiregularComponents"}
    ),
    "RegularOrBiregularComponents": frozenset({"RegularOrBiregularComponents"}),
    "None": frozenset({"None"}),
}


@dataclass(frozen=True)
class ExtremalClass:
    """The most specific structural class a graph belongs to.

    Args:
        tag: class name, ordered from most to least specific in ``ExtremalTag``
        witness: the degree value(s) realizing the class, e.g. ``(k,)`` for a
            k-regular graph or ``(Delta, delta)`` for a biregular one
    """

    tag: ExtremalTag
    witness: tuple[int, ...] = ()

    def satisfies(self, tag: ExtremalTag) -> bool:
        """True when this class implies ``tag``."""
        return tag in _TAG_IMPLICATIONS[self.tag]

    def __str__(self) -> str:
        if not self.witness:
            return self.tag
        return f"{self.tag}({','.join(str(d) for d in self.witness)})"


def _as_vertex_array(values: Any, n: int) -> np.ndarray:
    """Coerce vertex ids to int64, rejecting anything that is not an integer id."""
    arr = np.asarray(values)
    if arr.size == 0:
        return np.zeros(0, dtype=np.int64)
    if not np.issubdtype(arr.dtype, np.integer):
        try:
            as_float = arr.astype(np.float64)
        except (TypeError, ValueError):
            raise VertexOutOfRange(arr.flat[0], n)
        bad = np.flatnonzero(as_float != np.floor(as_float))
        if bad.size:
            raise VertexOutOfRange(arr.flat[bad[0]], n)
        arr = as_float
    return arr.astype(np.int64).ravel()


def _canonical_edges(
    n: int, us: np.ndarray, vs: np.ndarray, strict: bool
) -> np.ndarray:
    """Validate endpoint arrays and return the lexicographically sorted (m, 2) edge array."""
    out_of_range = np.flatnonzero((us < 0) | (us >= n) | (vs < 0) | (vs >= n))
    if out_of_range.size:
        i = out_of_range[0]
        raise VertexOutOfRange(int(us[i]) if not 0 <= us[i] < n else int(vs[i]), n)

    loops = np.flatnonzero(us == vs)
    if loops.size:
        if strict:
            raise SelfLoop(int(us[loops[0]]))
        keep = us != vs
        us, vs = us[keep], vs[keep]
        logger.debug("dropped %d self-loop(s)", loops.size)

    lo = np.minimum(us, vs)
    hi = np.maximum(us, vs)
    keys = lo * n + hi
    unique_keys, counts = np.unique(keys, return_counts=True)
    if unique_keys.size != keys.size:
        if strict:
            dup = int(unique_keys[np.flatnonzero(counts > 1)[0]])
            raise DuplicateEdge(dup // n, dup % n)
        logger.debug("dropped %d duplicate edge(s)", keys.size - unique_keys.size)

    # np.unique sorts, which is exactly the lexicographic (min, max) order
    return np.column_stack([unique_keys // n, unique_keys % n]).astype(np.int64)


class Graph:
    """
    Immutable simple undirected graph without isolated vertices.

    Build instances through ``from_edge_list``, ``Graph.from_arrays`` or
    ``Graph.from_networkx``; the constructors validate every invariant, and
    the stored arrays are flagged read-only.
    """

    __slots__ = ("_n", "_edges", "_degrees", "_indptr", "_adjacency", "_components")

    def __init__(self, n: int, edges: np.ndarray, degrees: np.ndarray):
        self._n = int(n)
        self._edges = edges
        self._degrees = degrees
        self._edges.setflags(write=False)
        self._degrees.setflags(write=False)
        self._indptr: np.ndarray | None = None
        self._adjacency: np.ndarray | None = None
        self._components: list[frozenset[int]] | None = None

    ##############################
    ##### Constructors
    ##############################
    @classmethod
    def from_arrays(
        cls, n: int, us: Any, vs: Any, *, strict: bool = True
    ) -> "Graph":
        """Build a graph from parallel endpoint arrays (the vectorised core of every constructor)."""
        if isinstance(n, bool) or int(n) != n or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n}")
        n = int(n)
        us_arr = _as_vertex_array(us, n)
        vs_arr = _as_vertex_array(vs, n)
        if us_arr.size != vs_arr.size:
            raise ValueError("endpoint arrays differ in length")

        edges = _canonical_edges(n, us_arr, vs_arr, strict)
        degrees = np.bincount(edges.ravel(), minlength=n).astype(np.int64)

        isolated = np.flatnonzero(degrees == 0)
        if isolated.size:
            raise IsolatedVertex(int(isolated[0]))

        return cls(n, edges, degrees)

    @classmethod
    def from_edge_list(
        cls, n: int, pairs: Iterable[Sequence[int]], *, strict: bool = True
    ) -> "Graph":
        """Build a graph from ``(u, v)`` pairs on vertices ``0 .. n-1``."""
        arr = np.asarray(list(pairs))
        if arr.size == 0:
            arr = np.zeros((0, 2), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("pairs must be a sequence of (u, v) tuples")
        return cls.from_arrays(n, arr[:, 0], arr[:, 1], strict=strict)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert a networkx graph, relabelling nodes to 0 .. n-1 in sorted order."""
        try:
            nodes = sorted(graph.nodes)
        except TypeError:
            nodes = list(graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        pairs = [(index[u], index[v]) for u, v in graph.edges]
        return cls.from_edge_list(len(nodes), pairs)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(map(tuple, self._edges.tolist()))
        return graph

    ##############################
    ##### Basic queries
    ##############################
    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return int(self._edges.shape[0])

    @property
    def edges(self) -> np.ndarray:
        """Read-only (m, 2) array of (min, max) pairs in lexicographic order."""
        return self._edges

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def min_degree(self) -> int:
        return int(self._degrees.min())

    @property
    def max_degree(self) -> int:
        return int(self._degrees.max())

    def degree(self, u: int) -> int:
        return int(self._degrees[u])

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(map(tuple, self._edges.tolist()))

    def _build_adjacency(self) -> None:
        sources = np.concatenate([self._edges[:, 0], self._edges[:, 1]])
        targets = np.concatenate([self._edges[:, 1], self._edges[:, 0]])
        order = np.lexsort((targets, sources))
        adjacency = targets[order]
        adjacency.setflags(write=False)
        # readers check _adjacency, so _indptr must be in place first
        self._indptr = np.concatenate([[0], np.cumsum(self._degrees)])
        self._adjacency = adjacency

    def neighbors(self, u: int) -> np.ndarray:
        """Neighbors of ``u`` in ascending order."""
        if self._adjacency is None:
            self._build_adjacency()
        return self._adjacency[self._indptr[u] : self._indptr[u + 1]]

    def components(self) -> list[frozenset[int]]:
        """Vertex sets of the connected components, ordered by smallest vertex."""
        if self._components is None:
            seen = np.zeros(self._n, dtype=bool)
            components = []
            for start in range(self._n):
                if seen[start]:
                    continue
                seen[start] = True
                queue = deque([start])
                members = [start]
                while queue:
                    u = queue.popleft()
                    for v in self.neighbors(u).tolist():
                        if not seen[v]:
                            seen[v] = True
                            members.append(v)
                            queue.append(v)
                components.append(frozenset(members))
            self._components = components
        return list(self._components)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    ##############################
    ##### Value semantics
    ##############################
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._edges, other._edges)

    def __hash__(self) -> int:
        return hash((self._n, self._edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def from_edge_list(
    n: int, pairs: Iterable[Sequence[int]], strict: bool = True
) -> Graph:
    """Build a validated Graph; ``strict=False`` silently drops self-loops and duplicates."""
    return Graph.from_edge_list(n, pairs, strict=strict)


def degree_extremes(g: Graph) -> tuple[int, int]:
    """Return ``(delta, Delta)``, the minimum and maximum degree."""
    return g.min_degree, g.max_degree


def connected_components(g: Graph) -> list[frozenset[int]]:
    return g.components()


def classify_extremal(g: Graph) -> ExtremalClass:
    """Return the most specific extremal class of ``g``.

    A (Delta, delta)-biregular graph is bipartite with every vertex of one side
    of degree Delta and every vertex of the other of degree delta; with two
    distinct degree values this is the same as every edge joining a Delta-vertex
    to a delta-vertex.
    """
    degrees = g.degrees
    delta, Delta = degree_extremes(g)
    du = degrees[g.edges[:, 0]]
    dv = degrees[g.edges[:, 1]]

    if delta == Delta:
        if Delta == 1:
            return ExtremalClass("UnionOfP2", (1,))
        return ExtremalClass("Regular", (Delta,))

    if np.all((degrees == delta) | (degrees == Delta)) and np.all(du != dv):
        return ExtremalClass("Biregular", (Delta, delta))

    components = g.components()
    labels = np.empty(g.n, dtype=np.int64)
    for i, members in enumerate(components):
        labels[list(members)] = i
    edge_labels = labels[g.edges[:, 0]]

    all_regular = True
    all_regular_or_biregular = True
    for i, members in enumerate(components):
        values = np.unique(degrees[list(members)])
        if values.size == 1:
            continue
        all_regular = False
        inside = edge_labels == i
        if values.size != 2 or np.any(du[inside] == dv[inside]):
            all_regular_or_biregular = False
            break

    distinct = tuple(int(d) for d in np.unique(degrees))
    if all_regular:
        return ExtremalClass("ComponentwiseRegular", distinct)
    if all_regular_or_biregular:
        return ExtremalClass("RegularOrBiregularComponents", distinct)
    return ExtremalClass("None")
