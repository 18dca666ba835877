import logging
import math

import numpy as np
import pytest

from isd_indices import (
    SampleSummary,
    compensated_sum,
    format_float,
    get_thread_count,
    log_timing,
    summarize_columns,
)


def test_compensated_sum_is_order_independent():
    values = [1e16, 1.0, -1e16, 1.0] * 50
    assert compensated_sum(values) == 100.0
    assert compensated_sum(np.array(values[::-1])) == 100.0


def test_sample_summary():
    summary = SampleSummary.from_values([1.0, 2.0, 3.0, 4.0])
    assert summary.mean == 2.5
    assert summary.stderr == pytest.approx(math.sqrt(5 / 3 / 4))
    assert summary.count == 4

    single = SampleSummary.from_values([7.0])
    assert single.mean == 7.0 and math.isnan(single.stderr)
    empty = SampleSummary.from_values([])
    assert empty.count == 0 and math.isnan(empty.mean)


def test_summarize_columns():
    first, second = summarize_columns(np.array([[1.0, 10.0], [3.0, 30.0]]))
    assert (first.mean, second.mean) == (2.0, 20.0)


def test_thread_count(monkeypatch):
    monkeypatch.setenv("ISDLAB_THREADS", "3")
    assert get_thread_count() == 3
    monkeypatch.setenv("ISDLAB_THREADS", "0")
    assert get_thread_count() == 1
    monkeypatch.setenv("ISDLAB_THREADS", "many")
    assert get_thread_count() >= 1


def test_format_float():
    assert format_float(4 / 3) == "1.33333333333"
    assert format_float(6187.5) == "6187.5"
    assert format_float(math.nan) == ""
    assert format_float(None) == ""


def test_log_timing(caplog):
    @log_timing
    def work(x):
        return x + 1

    with caplog.at_level(logging.INFO):
        assert work(1) == 2
    assert any("work:" in record.getMessage() for record in caplog.records)
