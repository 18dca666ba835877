import pytest

from isd_indices import (
    IsolatedVertex,
    ParseError,
    SelfLoop,
    format_edge_list,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)


def test_parse_with_comments_and_blank_lines(p3):
    text = "# a path\n\n3 2\n0 1\n  # middle comment\n1   2\n"
    assert parse_edge_list(text) == p3


def test_format_is_header_then_sorted_edges(c4):
    assert format_edge_list(c4) == "4 4\n0 1\n0 3\n1 2\n2 3\n"


def test_write_then_read(tmp_path, k23):
    path = tmp_path / "k23.txt"
    write_edge_list(k23, path)
    assert read_edge_list(path) == k23


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 0),
        ("# only a comment\n", 0),
        ("3\n0 1\n", 1),
        ("3 x\n", 1),
        ("3 2\n0 1\n1\n", 3),
        ("3 2\n0 1\n1 3\n", 3),
        ("3 2\n0 1\n1 2\n0 2\n", 4),
        ("3 3\n0 1\n1 2\n", 3),
    ],
)
def test_parse_errors_report_the_line(text, line):
    with pytest.raises(ParseError) as excinfo:
        parse_edge_list(text)
    assert excinfo.value.line == line


def test_structural_errors_pass_through():
    with pytest.raises(SelfLoop):
        parse_edge_list("2 2\n0 1\n1 1\n")
    with pytest.raises(IsolatedVertex):
        parse_edge_list("3 1\n0 1\n")


def test_permissive_parse_drops_duplicates():
    g = parse_edge_list("3 3\n0 1\n1 0\n1 2\n", strict=False)
    assert g.m == 2
