import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curvecount.counts import (
    CacheError,
    JClass,
    RecursionTable,
    binomial,
    divisibility_report,
    elliptic_count,
    load_table,
    rational_count,
    save_table,
    zt_invariant,
)

# Frozen from an independent straight-line evaluation of the recursion
# (own additive Pascal triangle, no memoization).
KNOWN_COUNTS = {
    1: 1,
    2: 1,
    3: 12,
    4: 620,
    5: 87304,
    6: 26312976,
    7: 14616808192,
    8: 13525751027392,
    9: 19385778269260800,
    10: 40739017561997799680,
    11: 120278021410937387514880,
    12: 482113680618029292368686080,
    13: 2551154673732472157928033617920,
    14: 17410560213476464590484763013222400,
    15: 150246278745658335777587625061177835520,
}


class TestBinomial:
    def test_small_values(self):
        assert binomial(5, 2) == 10
        assert binomial(5, 5) == 1
        assert binomial(8, 4) == 70

    def test_out_of_range_convention(self):
        assert binomial(4, 7) == 0
        assert binomial(4, -1) == 0
        assert binomial(-2, 0) == 0

    @given(st.integers(1, 60), st.integers(0, 60))
    def test_pascal_identity(self, n, k):
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestRationalCount:
    def test_known_values(self):
        table = RecursionTable()
        for d, expected in KNOWN_COUNTS.items():
            assert rational_count(d, table) == expected

    def test_twelve_has_27_digits(self):
        assert len(str(rational_count(12))) == 27

    def test_shared_table_agrees_with_fresh_tables(self):
        shared = RecursionTable()
        rational_count(15, shared)
        for d in range(1, 16):
            assert rational_count(d) == shared[d]

    def test_table_fills_densely(self):
        table = RecursionTable()
        rational_count(6, table)
        assert [d for d, _ in table.items()] == list(range(1, 7))

    def test_rejects_nonpositive_degree(self):
        with pytest.raises(ValueError):
            rational_count(0)
        with pytest.raises(ValueError):
            rational_count(-3)


class TestEllipticCount:
    def test_degree_three_all_classes(self):
        assert elliptic_count(3, JClass.GENERIC) == 12
        assert elliptic_count(3, JClass.J_ZERO) == 4
        assert elliptic_count(3, JClass.J_1728) == 6

    def test_degree_four_generic(self):
        assert elliptic_count(4, JClass.GENERIC) == 1860

    def test_rejects_low_degree(self):
        for d in (2, 1, 0):
            with pytest.raises(ValueError):
                elliptic_count(d, JClass.GENERIC)

    def test_aut_factors(self):
        assert JClass.GENERIC.aut_factor == 1
        assert JClass.J_ZERO.aut_factor == 3
        assert JClass.J_1728.aut_factor == 2

    def test_divisions_exact_to_30(self):
        table = RecursionTable()
        for d in range(3, 31):
            for j in JClass:
                assert elliptic_count(d, j, table) * j.aut_factor == zt_invariant(d, table)


class TestZtInvariant:
    def test_values(self):
        assert zt_invariant(3) == 12
        assert zt_invariant(4) == 1860
        assert zt_invariant(5) == 523824

    def test_rejects_low_degree(self):
        with pytest.raises(ValueError):
            zt_invariant(2)


class TestDivisibility:
    def test_rows(self):
        rows = {r.d: r for r in divisibility_report(6)}
        assert (rows[3].count_mod3, rows[3].d_mod3) == (0, 0)
        assert (rows[4].count_mod3, rows[4].d_mod3) == (2, 1)
        assert (rows[6].count_mod3, rows[6].d_mod3) == (0, 0)

    def test_mod3_law_to_12(self):
        assert all(not row.anomaly for row in divisibility_report(12))

    def test_binom_nonzero_mod3_when_d_divisible(self):
        for row in divisibility_report(30):
            if row.d_mod3 == 0:
                assert row.binom_mod3 != 0

    def test_rejects_low_bound(self):
        with pytest.raises(ValueError):
            divisibility_report(2)


class _FixedProbe(random.Random):
    """Always probes the same entry, so tampering tests are deterministic."""

    def __init__(self, target):
        super().__init__(0)
        self._target = target

    def randrange(self, start, stop=None, step=1):
        return self._target


class TestCacheFile:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "counts.txt"
        table = RecursionTable()
        rational_count(8, table)
        save_table(table, path)
        loaded = load_table(path)
        assert list(loaded.items()) == list(table.items())

    def test_format_is_plain_lines(self, tmp_path):
        path = tmp_path / "counts.txt"
        table = RecursionTable()
        rational_count(3, table)
        save_table(table, path)
        assert path.read_text() == "1 1\n2 1\n3 12\n"

    def test_rejects_bad_base_entry(self, tmp_path):
        path = tmp_path / "counts.txt"
        path.write_text("1 2\n")
        with pytest.raises(CacheError):
            load_table(path)

    def test_rejects_gap_in_degrees(self, tmp_path):
        path = tmp_path / "counts.txt"
        path.write_text("1 1\n3 12\n")
        with pytest.raises(CacheError) as err:
            load_table(path)
        assert err.value.line_no == 2

    def test_rejects_malformed_line(self, tmp_path):
        path = tmp_path / "counts.txt"
        path.write_text("1 1\n2 one\n")
        with pytest.raises(CacheError) as err:
            load_table(path)
        assert err.value.line_no == 2

    def test_rejects_blank_line(self, tmp_path):
        path = tmp_path / "counts.txt"
        path.write_text("1 1\n\n2 1\n")
        with pytest.raises(CacheError):
            load_table(path)

    def test_rejects_empty_file(self, tmp_path):
        path = tmp_path / "counts.txt"
        path.write_text("")
        with pytest.raises(CacheError):
            load_table(path)

    def test_probe_catches_tampered_entry(self, tmp_path):
        path = tmp_path / "counts.txt"
        table = RecursionTable()
        rational_count(6, table)
        save_table(table, path)
        lines = path.read_text().splitlines()
        lines[3] = "4 621"
        path.write_text("".join(line + "\n" for line in lines))
        with pytest.raises(CacheError) as err:
            load_table(path, rng=_FixedProbe(4))
        assert err.value.line_no == 4
