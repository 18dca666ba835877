import math

import pytest

from isd_indices import EmptyGrid, InvalidGrid, inclusive_range, log_grid, parse_grid, validate_grid


def test_inclusive_range_keeps_the_stop_value():
    assert parse_grid("-2:2:0.5") == (-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0)


def test_decimal_steps_land_on_typed_values():
    grid = parse_grid("0.1:0.9:0.1")
    assert grid == (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
    assert len(parse_grid("-2:-0.1:0.1")) == 20


def test_zero_is_never_negative():
    grid = parse_grid("-0.2:0.2:0.1")
    assert grid[2] == 0.0
    assert math.copysign(1.0, grid[2]) == 1.0


def test_log_grid_excludes_the_stop_value():
    grid = parse_grid("1e-3:1:log3")
    assert grid == pytest.approx((1e-3, 1e-2, 1e-1))
    assert len(parse_grid("1e-3:1:log40")) == 40
    assert max(parse_grid("1e-3:1:log40")) < 1


def test_comma_lists():
    assert parse_grid("-1, 0,1") == (-1.0, 0.0, 1.0)
    assert parse_grid("0.25") == (0.25,)


@pytest.mark.parametrize("text", ["", "   ", ","])
def test_empty_grids(text):
    with pytest.raises(EmptyGrid):
        parse_grid(text, "a_grid")


@pytest.mark.parametrize(
    "text",
    ["1,0", "0,0", "1:0:0.1", "0:1:0", "0:1:-0.5", "0:1", "a:1:0.1", "0:1:logx", "0:1:log3", "1,x"],
)
def test_invalid_grids(text):
    with pytest.raises(InvalidGrid):
        parse_grid(text)


def test_validate_grid():
    assert validate_grid([0, 1]) == (0.0, 1.0)
    with pytest.raises(InvalidGrid):
        validate_grid([0.0, math.inf])
    with pytest.raises(EmptyGrid) as excinfo:
        validate_grid([], "p_grid")
    assert excinfo.value.name == "p_grid"


def test_builders_directly():
    assert inclusive_range(1.1, 2.0, 0.1)[-1] == 2.0
    assert len(log_grid(0.01, 1.0, 2)) == 2
