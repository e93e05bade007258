import math

import pytest

from normconn import reproduce
from normconn.reproduce import Row


@pytest.fixture(scope="module")
def table():
    return reproduce.rows(seed=0)


class TestRows:
    def test_all_rows_agree(self, table):
        bad = [r.label for r in table if not r.ok]
        assert not bad

    def test_tolerances_follow_the_source(self, table):
        by_label = {r.label: r for r in table}
        assert by_label["a(K_5)"].tolerance == reproduce.DIRECT_TOL
        assert by_label["a(K_6,linf:2)"].tolerance == reproduce.SEARCH_TOL
        assert by_label["a(T_3)"].tolerance == reproduce.ROUNDED_TOL

    def test_row_diff(self):
        row = Row("x", 1.0, 1.0 + 2e-9, 1e-9, "")
        assert row.diff == pytest.approx(2e-9) and not row.ok

    def test_nan_is_never_ok(self):
        assert not Row("x", 1.0, math.nan, 1.0, "").ok


class TestFormatting:
    def test_table_has_one_line_per_row(self, table):
        text = reproduce.format_table(table)
        assert len(text.splitlines()) == len(table) + 1
        assert "NO" not in text.split()

    def test_mismatch_is_reported(self):
        rows = [Row("a", 1.0, 2.0, 1e-9, "src")]
        assert not reproduce.all_ok(rows)
        assert " NO " in reproduce.format_table(rows)
