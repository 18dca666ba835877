"""Hypothesis strategies shared by the property tests."""

import hypothesis.strategies as st

from isd_indices import Graph, from_edge_list


@st.composite
def simple_graphs(draw, min_n: int = 2, max_n: int = 12) -> Graph:
    """Random simple graphs without isolated vertices.

    Every vertex v gets one edge to some other vertex, then extra pairs are
    added; loops and repeats are dropped by the permissive constructor.
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    offsets = draw(st.lists(st.integers(0, n - 2), min_size=n, max_size=n))
    pairs = [(v, (v + 1 + k) % n) for v, k in enumerate(offsets)]
    vertex = st.integers(0, n - 1)
    pairs += draw(st.lists(st.tuples(vertex, vertex), max_size=3 * n))
    return from_edge_list(n, pairs, strict=False)


exponents = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False).filter(lambda a: a != 0)
