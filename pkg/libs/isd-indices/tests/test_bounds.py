import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isd_indices import (
    BOUND_REPORT_COLUMNS,
    THEOREMS,
    DegenerateSample,
    EmptyGrid,
    ExponentOutOfRange,
    IsdError,
    UnknownTheorem,
    atlas_graphs,
    cauchy_schwarz_converse_gap,
    check_bound,
    er_sample,
    from_edge_list,
    named_graph,
    replica_stream,
    verify_all,
)
from strategies import exponents, simple_graphs

# theorems whose stated equality case is the regular graphs, on every side they have
REGULAR_EQUALITY = (
    "P1_EdgeBound",
    "T2_RandicRelation",
    "T3_NegatedExponent",
    "T5_GALower",
    "T6_AGUpper",
    "T8_M1SumDeltaRefined",
    "T9_M1SumDeltaUpper",
    "T10_M1Product",
)


def _present_sides(report):
    sides = []
    if report.lower is not None:
        sides.append(report.equality_lower)
    if report.upper is not None:
        sides.append(report.equality_upper)
    return sides


#########################
##### Worked examples
#########################
def test_edge_bound_on_cycle(c4):
    report = check_bound("P1_EdgeBound", c4, 1.0)
    assert report.lower == report.upper == pytest.approx(1.0)
    assert report.value == pytest.approx(1.0)
    assert report.equality_lower and report.equality_upper and report.holds
    assert report.predicted_equality_class == "Regular|Regular"
    assert report.actual_class.tag == "Regular"


def test_m1_sum_on_two_disjoint_edges(two_p2):
    report = check_bound("T7_M1Sum", two_p2, 1.0)
    assert report.value == pytest.approx(5.0)
    assert report.lower == pytest.approx(5.0)
    assert report.equality_lower
    assert report.predicted_class_lower == "UnionOfP2"
    assert report.actual_class.tag == "UnionOfP2"


@pytest.mark.parametrize("a", [0.1, 0.5, 1.0, 3.0])
def test_m1_sum_equality_for_disjoint_edges_at_every_positive_exponent(two_p2, a):
    assert check_bound("T7_M1Sum", two_p2, a).equality_lower


def test_m1_product_on_star(k13):
    report = check_bound("T10_M1Product", k13, 1.0)
    assert report.lower == pytest.approx(9.0)
    assert report.value == pytest.approx(9.0)
    assert report.equality_lower
    assert not report.equality_upper
    assert report.actual_class.tag == "Biregular"
    assert report.converse_asserted


def test_chi_relation_on_path(p3):
    report = check_bound("T4_ChiRelation", p3, 2.0)
    assert report.lower == pytest.approx(2 / 9)
    assert report.value == pytest.approx(2 / 5)
    assert report.upper == pytest.approx(4 / 9)
    assert report.holds
    assert report.strict_lower and not report.strict_upper
    assert report.strict_holds is True
    assert report.predicted_class_upper == "ComponentwiseRegular"


def test_chi_relation_branches(p3):
    middle = check_bound("T4_ChiRelation", p3, 0.5)
    assert middle.strict_upper and not middle.strict_lower
    assert middle.predicted_class_lower == "ComponentwiseRegular"

    negative = check_bound("T4_ChiRelation", p3, -1.0)
    assert negative.lower is None and negative.upper is not None

    for a in (0.0, 1.0):
        assert not check_bound("T4_ChiRelation", p3, a).applicable


def test_sides_swap_for_negative_exponents(p3):
    for theorem in ("P1_EdgeBound", "T2_RandicRelation", "T3_NegatedExponent"):
        for a in (-1.5, 1.5):
            report = check_bound(theorem, p3, a)
            assert report.lower <= report.value <= report.upper


def test_inapplicable_report(c4):
    report = check_bound("T9_M1SumDeltaUpper", c4, -1.0)
    assert not report.applicable
    assert math.isnan(report.value)
    assert report.holds
    assert report.as_row()["value"] is None
    assert report.as_row()["predicted_class"] == ""


def test_delta_refined_applicability(c4, p3):
    # delta = 2: a must be <= -1 when negative
    assert check_bound("T8_M1SumDeltaRefined", c4, -1.0).applicable
    assert not check_bound("T8_M1SumDeltaRefined", c4, -0.5).applicable
    # delta = 1 leaves no negative exponent
    assert not check_bound("T8_M1SumDeltaRefined", p3, -3.0).applicable
    assert check_bound("T8_M1SumDeltaRefined", p3, 0.5).applicable


def test_m1_sum_negative_exponent_asserts_no_equality_class(p3):
    report = check_bound("T7_M1Sum", p3, -1.0)
    assert report.lower == pytest.approx(2.0 * p3.m)
    assert report.predicted_class_lower is None
    assert not report.converse_asserted


def test_product_converse_is_only_asserted_for_connected_graphs(two_p2, c4):
    assert not check_bound("T10_M1Product", two_p2, 1.0).converse_asserted
    assert check_bound("T10_M1Product", c4, 1.0).converse_asserted


def test_check_bound_errors(c4):
    with pytest.raises(UnknownTheorem):
        check_bound("T11_Imaginary", c4, 1.0)
    with pytest.raises(ValueError):
        check_bound("P1_EdgeBound", c4, math.nan)


def test_exponents_beyond_double_range(p2):
    k5 = named_graph("K5")
    with pytest.raises(ExponentOutOfRange) as excinfo:
        check_bound("P1_EdgeBound", k5, 700.0)
    assert (excinfo.value.theorem, excinfo.value.a) == ("P1_EdgeBound", 700.0)
    with pytest.raises(IsdError):
        check_bound("P1_EdgeBound", k5, -700.0)
    with pytest.raises(ExponentOutOfRange):
        verify_all(k5, [1.0, 700.0])

    # unit degrees stay representable at any exponent
    report = check_bound("P1_EdgeBound", p2, 700.0)
    assert report.holds and report.equality_lower and report.equality_upper


#########################
##### verify_all
#########################
def test_verify_all_on_cycle(c4):
    reports = verify_all(c4, [-1.0, 1.0])
    assert len(reports) == 20
    assert [r.theorem for r in reports[:2]] == ["P1_EdgeBound", "P1_EdgeBound"]
    assert [r.a for r in reports[:2]] == [-1.0, 1.0]
    assert all(r.holds for r in reports)
    for report in reports:
        if report.applicable and report.theorem in REGULAR_EQUALITY:
            assert all(_present_sides(report)), report.theorem
    assert set(reports[0].as_row()) == set(BOUND_REPORT_COLUMNS)


def test_verify_all_branch_selection(p3):
    by_theorem = {r.theorem: r for r in verify_all(p3, [0.5])}
    assert by_theorem["T4_ChiRelation"].strict_upper
    assert by_theorem["T8_M1SumDeltaRefined"].applicable
    assert by_theorem["T10_M1Product"].applicable
    assert by_theorem["T9_M1SumDeltaUpper"].applicable


def test_verify_all_is_the_same_on_a_thread_pool(k23):
    grid = [-2.0, -0.5, 0.5, 2.0]
    pooled = [r.as_row() for r in verify_all(k23, grid, max_workers=4)]
    assert pooled == [r.as_row() for r in verify_all(k23, grid)]


def test_verify_all_empty_grid(c4):
    with pytest.raises(EmptyGrid):
        verify_all(c4, [])


#########################
##### Soundness and equality cases
#########################
@pytest.mark.parametrize("name", [f"C{k}" for k in range(3, 11)] + [f"K{k}" for k in range(3, 7)])
@pytest.mark.parametrize("a", [-2.0, -0.5, 0.5, 2.0])
def test_regular_graphs_attain_equality(name, a):
    g = named_graph(name)
    for theorem in REGULAR_EQUALITY:
        report = check_bound(theorem, g, a)
        if report.applicable:
            assert all(_present_sides(report)), theorem


@settings(max_examples=300, deadline=None)
@given(g=simple_graphs(), a=exponents)
def test_every_applicable_bound_holds(g, a):
    for report in verify_all(g, [a]):
        assert report.holds, (report.theorem, report.slack_lower, report.slack_upper)
        # strict sides degenerate to equality as a approaches 1
        if report.strict_holds is not None and abs(a - 1.0) > 1e-2:
            assert report.strict_holds, report.theorem


@pytest.mark.slow
def test_bounds_hold_on_random_graphs():
    grid = [-2.0, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 1.5, 2.0]
    checked = 0
    for i in range(1500):
        rng = replica_stream(7, i)
        n = int(rng.integers(4, 41))
        p = float(rng.uniform(0.1, 0.9))
        try:
            g = er_sample(n, p, rng)
        except DegenerateSample:
            continue
        checked += 1
        for report in verify_all(g, grid):
            assert report.holds, (i, report.theorem, report.a)
    assert checked >= 1000


@pytest.mark.parametrize("a", [-1.0, 0.5, 1.0, 2.0])
def test_product_lower_equality_iff_regular_or_biregular(a):
    """On connected graphs the lower product bound is tight exactly for regular or biregular graphs."""
    for g in atlas_graphs():
        report = check_bound("T10_M1Product", g, a)
        expected = report.actual_class.satisfies("RegularOrBiregularComponents")
        assert report.equality_lower == expected, (g.edges.tolist(), a)


@pytest.mark.parametrize("a", [-1.0, 0.5, 2.0])
def test_chi_relation_equality_iff_regular(a):
    for g in atlas_graphs():
        report = check_bound("T4_ChiRelation", g, a)
        tight = report.equality_upper if report.strict_lower or a < 0 else report.equality_lower
        assert tight == report.actual_class.satisfies("Regular"), (g.edges.tolist(), a)


@settings(max_examples=100, deadline=None)
@given(k=st.integers(2, 6), a=st.floats(0.05, 3.0))
def test_delta_refined_and_upper_coincide_on_regular_graphs(k, a):
    g = named_graph(f"K{k + 1}")
    lower = check_bound("T8_M1SumDeltaRefined", g, a)
    upper = check_bound("T9_M1SumDeltaUpper", g, a)
    assert lower.lower == pytest.approx(upper.upper, rel=1e-12)
    assert lower.equality_lower and upper.equality_upper


def test_product_equality_on_disconnected_graphs_depends_on_edge_sums():
    # star K1,3 plus a triangle: every edge has d_u + d_v = 4
    g = from_edge_list(7, [(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (6, 4)])
    tight = check_bound("T10_M1Product", g, 1.0)
    loose = check_bound("T10_M1Product", g, 2.0)
    assert tight.actual_class.tag == "RegularOrBiregularComponents"
    assert tight.equality_lower
    assert not loose.equality_lower and loose.holds
    assert not tight.converse_asserted


#########################
##### Converse Cauchy-Schwarz
#########################
positive = st.floats(min_value=0.01, max_value=100.0)


@settings(max_examples=300)
@given(data=st.data())
def test_cauchy_schwarz_converse(data):
    size = data.draw(st.integers(1, 20))
    xs = data.draw(st.lists(positive, min_size=size, max_size=size))
    ys = data.draw(st.lists(positive, min_size=size, max_size=size))
    lhs, rhs = cauchy_schwarz_converse_gap(xs, ys)
    assert lhs <= rhs * (1 + 1e-12)


def test_cauchy_schwarz_converse_is_tight_for_proportional_sequences():
    lhs, rhs = cauchy_schwarz_converse_gap([1.0, 2.0, 3.0], [2.0, 4.0, 6.0])
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_cauchy_schwarz_converse_rejects_bad_input():
    with pytest.raises(ValueError):
        cauchy_schwarz_converse_gap([1.0], [1.0, 2.0])
    with pytest.raises(ValueError):
        cauchy_schwarz_converse_gap([1.0, -1.0], [1.0, 2.0])


def test_theorem_registry():
    assert len(THEOREMS) == 10
    assert all(config.theorem == key for key, config in THEOREMS.items())
