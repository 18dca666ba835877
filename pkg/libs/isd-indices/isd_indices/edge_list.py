"""
Edge-list text format.

    # comments start with '#'
    n m
    u v        (m lines, whitespace-separated, 0-based)
"""

from pathlib import Path

from .errors import ParseError
from .graph import Graph

__all__ = [
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "write_edge_list",
]


def _parse_int_pair(line_no: int, fields: list[str], what: str) -> tuple[int, int]:
    if len(fields) != 2:
        raise ParseError(line_no, f"expected two integers for {what}, got {len(fields)} field(s)")
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(line_no, f"{what} must be integers, got '{' '.join(fields)}'")


def parse_edge_list(text: str, strict: bool = True) -> Graph:
    """Parse the edge-list format into a Graph.

    Syntax problems, out-of-range vertices and a header/edge-count mismatch raise
    ``ParseError`` with the offending line; structural problems (self-loops,
    duplicates in strict mode, isolated vertices) raise the graph errors.
    """
    header: tuple[int, int] | None = None
    us: list[int] = []
    vs: list[int] = []
    last_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last_line = line_no
        fields = line.split()

        if header is None:
            n, m = _parse_int_pair(line_no, fields, "header 'n m'")
            if n < 1 or m < 0:
                raise ParseError(line_no, f"header needs n >= 1 and m >= 0, got '{n} {m}'")
            header = (n, m)
            continue

        n, m = header
        if len(us) == m:
            raise ParseError(line_no, f"more edge lines than the {m} declared in the header")
        u, v = _parse_int_pair(line_no, fields, "edge 'u v'")
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise ParseError(line_no, f"vertex {vertex} is outside [0, {n})")
        us.append(u)
        vs.append(v)

    if header is None:
        raise ParseError(0, "missing 'n m' header")
    n, m = header
    if len(us) != m:
        raise ParseError(last_line, f"header declares {m} edges but {len(us)} were given")

    return Graph.from_arrays(n, us, vs, strict=strict)


def read_edge_list(path: str | Path, strict: bool = True) -> Graph:
    return parse_edge_list(Path(path).read_text(), strict=strict)


def format_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list format, edges in lexicographic order."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges.tolist())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))
