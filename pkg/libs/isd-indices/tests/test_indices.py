import math

import numpy as np
import pytest

from isd_indices import (
    IndexSpec,
    NonFiniteTerm,
    UnknownIndexFamily,
    ZeroExponent,
    arithmetic_geometric,
    dense_approximation,
    edge_sum,
    er_sample,
    evaluate,
    general_randic,
    general_sum_connectivity,
    geometric_arithmetic,
    isd,
    named_graph,
    parse_index_spec,
    parse_index_specs,
    replica_stream,
    variable_first_zagreb,
    vertex_sum,
)


#########################
##### Summation engine
#########################
def test_edge_sum_examples(p2, p3, c4):
    assert edge_sum(p2, lambda x, y: 1.0) == 1.0
    assert edge_sum(p3, lambda x, y: x + y) == 6.0
    assert edge_sum(c4, lambda x, y: x * y) == 16.0


def test_edge_sum_accepts_scalar_only_functions(p3):
    assert edge_sum(p3, lambda x, y: math.hypot(x, y)) == pytest.approx(2 * math.sqrt(5))


def test_edge_sum_rejects_non_finite_terms(p3):
    with pytest.raises(NonFiniteTerm) as excinfo:
        edge_sum(p3, lambda x, y: 1.0 / (x - 1.0))
    assert (excinfo.value.u, excinfo.value.v) == (0, 1)


def test_vertex_sum(k13):
    assert vertex_sum(k13, lambda d: d) == 2.0 * k13.m


#########################
##### Named indices
#########################
@pytest.mark.parametrize("a", [-2.5, -1.0, 0.0, 0.3, 1.0, 7.0])
def test_isd_single_edge(p2, a):
    assert isd(p2, a) == 0.5


def test_isd_examples(c4, p3, k13):
    assert isd(c4, 2) == pytest.approx(0.5, rel=1e-12)
    assert isd(p3, -1) == pytest.approx(4 / 3, rel=1e-12)
    assert isd(k13, 1) == pytest.approx(0.75, rel=1e-12)


def test_isd_at_zero_is_half_the_edge_count(k23):
    assert isd(k23, 0) == k23.m / 2


def test_isd_one_equals_sum_connectivity_minus_one(p3, k23):
    for g in (p3, k23, named_graph("P6")):
        assert isd(g, 1) == pytest.approx(general_sum_connectivity(g, -1), rel=1e-12)


def test_general_randic_examples(p2, p3, c4):
    assert general_randic(p2, -0.5) == pytest.approx(1.0, rel=1e-12)
    assert general_randic(p3, -1) == pytest.approx(1.0, rel=1e-12)
    assert general_randic(c4, 1) == pytest.approx(16.0, rel=1e-12)
    with pytest.raises(ZeroExponent):
        general_randic(c4, 0)


def test_general_sum_connectivity_examples(p2, p3, c4):
    assert general_sum_connectivity(p2, 1) == pytest.approx(2.0, rel=1e-12)
    assert general_sum_connectivity(p3, -1) == pytest.approx(2 / 3, rel=1e-12)
    assert general_sum_connectivity(c4, -0.5) == pytest.approx(2.0, rel=1e-12)


def test_geometric_and_arithmetic_examples(c4, p3, k13):
    assert geometric_arithmetic(c4) == pytest.approx(4.0, rel=1e-12)
    assert geometric_arithmetic(p3) == pytest.approx(4 * math.sqrt(2) / 3, rel=1e-12)
    assert geometric_arithmetic(k13) == pytest.approx(3 * math.sqrt(3) / 2, rel=1e-12)
    assert arithmetic_geometric(c4) == pytest.approx(4.0, rel=1e-12)
    assert arithmetic_geometric(p3) == pytest.approx(3 * math.sqrt(2) / 2, rel=1e-12)
    assert arithmetic_geometric(k13) == pytest.approx(2 * math.sqrt(3), rel=1e-12)


def test_variable_first_zagreb_examples(p2, p3, k13):
    assert variable_first_zagreb(p2, 2) == pytest.approx(2.0, rel=1e-12)
    assert variable_first_zagreb(p3, 2) == pytest.approx(6.0, rel=1e-12)
    assert variable_first_zagreb(k13, 3) == pytest.approx(30.0, rel=1e-12)


@pytest.mark.parametrize("k", [3, 4, 7])
@pytest.mark.parametrize("a", [-1.5, 0.5, 2.0])
def test_regular_closed_forms(k, a):
    g = named_graph(f"K{k + 1}")
    m = g.m
    assert isd(g, a) == pytest.approx(m / (2 * k**a), rel=1e-12)
    assert general_randic(g, a) == pytest.approx(m * k ** (2 * a), rel=1e-12)
    assert general_sum_connectivity(g, a) == pytest.approx(m * (2 * k) ** a, rel=1e-12)
    assert variable_first_zagreb(g, a) == pytest.approx(g.n * k**a, rel=1e-12)


def _adjacency_matrix(g) -> np.ndarray:
    adjacency = np.zeros((g.n, g.n), dtype=np.int64)
    adjacency[g.edges[:, 0], g.edges[:, 1]] = 1
    adjacency[g.edges[:, 1], g.edges[:, 0]] = 1
    return adjacency


def test_isd_matches_adjacency_matrix_sum():
    """ISD_a from the edge list agrees with a dense adjacency-matrix evaluation."""
    exponents = (-2.0, -1.0, -0.3, 0.7, 1.0, 2.5)
    for i in range(500):
        rng = replica_stream(2024, i)
        n = int(rng.integers(4, 30))
        p = float(rng.uniform(0.4, 0.9))
        g = er_sample(n, p, rng)

        adjacency = _adjacency_matrix(g)
        degrees = adjacency.sum(axis=1).astype(np.float64)
        for a in exponents:
            powers = degrees**a
            terms = np.triu(adjacency, k=1) / (powers[:, None] + powers[None, :])
            expected = math.fsum(terms[np.triu(adjacency, k=1) > 0].tolist())
            assert isd(g, a) == pytest.approx(expected, rel=1e-12)


def test_isd_minus_one_is_the_inverse_sum_indeg_index():
    """ISD_-1 equals sum over edges of d_u d_v / (d_u + d_v)."""
    for i in range(500):
        rng = replica_stream(77, i)
        n = int(rng.integers(4, 30))
        p = float(rng.uniform(0.4, 0.9))
        g = er_sample(n, p, rng)

        adjacency = _adjacency_matrix(g)
        degrees = adjacency.sum(axis=1)
        upper = np.argwhere(np.triu(adjacency, k=1) > 0)
        expected = math.fsum(
            degrees[u] * degrees[v] / (degrees[u] + degrees[v]) for u, v in upper.tolist()
        )
        assert isd(g, -1) == pytest.approx(expected, rel=1e-12)


#########################
##### Specs
#########################
@pytest.mark.parametrize(
    "text, family, exponent, label",
    [
        ("isd:-1", "isd", -1.0, "isd:-1"),
        ("ISD:0.5", "isd", 0.5, "isd:0.5"),
        ("ga", "ga", None, "ga"),
        ("AG", "ag", None, "ag"),
        ("m1:2", "m1", 2.0, "m1:2"),
        ("randic:-0.5", "randic", -0.5, "randic:-0.5"),
        ("chi:1", "chi", 1.0, "chi:1"),
    ],
)
def test_parse_index_spec(text, family, exponent, label):
    spec = parse_index_spec(text)
    assert (spec.family, spec.exponent, spec.label) == (family, exponent, label)


def test_parse_index_specs_list():
    assert [s.label for s in parse_index_specs("isd:-1, ga,m1:2")] == ["isd:-1", "ga", "m1:2"]


def test_bare_family_takes_the_default_exponent():
    assert parse_index_spec("isd", default_exponent=-2).label == "isd:-2"
    assert parse_index_spec("m1:3", default_exponent=-2).exponent == 3.0
    assert parse_index_spec("ga", default_exponent=-2).exponent is None
    with pytest.raises(ZeroExponent):
        parse_index_spec("randic", default_exponent=0.0)


@pytest.mark.parametrize("text", ["isd", "ga:1", "isd:abc", "isd:inf"])
def test_invalid_specs(text):
    with pytest.raises(ValueError):
        parse_index_spec(text)


def test_unknown_family_and_zero_randic():
    with pytest.raises(UnknownIndexFamily):
        parse_index_spec("wiener:1")
    with pytest.raises(ZeroExponent):
        IndexSpec("randic", 0.0)


def test_evaluate_and_with_exponent(p3):
    spec = IndexSpec("isd", 1.0)
    assert evaluate(spec.with_exponent(-1), p3) == pytest.approx(4 / 3, rel=1e-12)
    assert IndexSpec("ga").with_exponent(2.0) == IndexSpec("ga")


def test_dense_approximation():
    assert dense_approximation(IndexSpec("isd", 0.0), 100, 49.5) == pytest.approx(1237.5)
    assert dense_approximation(IndexSpec("isd", 1.0), 100, 49.5) == pytest.approx(25.0)
    # exact on regular graphs
    g = named_graph("K6")
    for spec in parse_index_specs("isd:-1,isd:2,randic:0.5,chi:-1,ga,ag,m1:2"):
        assert dense_approximation(spec, g.n, 5.0) == pytest.approx(evaluate(spec, g), rel=1e-12)
