from fractions import Fraction

import pytest

from spinestat.errors import CapExceeded, DomainError
from spinestat.series import catalan
from spinestat.stats import (
    average,
    dist_closed,
    dist_closed_all,
    dist_exhaustive,
    dist_recurrence,
    dist_recurrence_table,
    dist_series,
    dist_series_table,
    render_decimal,
    weighted_sum,
)

# The distribution tables for n = 1..10: counts of trees with k = 1..n
# right-spine segments.
TABLES = {
    1: [1],
    2: [1, 1],
    3: [2, 2, 1],
    4: [5, 5, 3, 1],
    5: [14, 14, 9, 4, 1],
    6: [42, 42, 28, 14, 5, 1],
    7: [132, 132, 90, 48, 20, 6, 1],
    8: [429, 429, 297, 165, 75, 27, 7, 1],
    9: [1430, 1430, 1001, 572, 275, 110, 35, 8, 1],
    10: [4862, 4862, 3432, 2002, 1001, 429, 154, 44, 9, 1],
}

# Averages as printed: numerator over unreduced Catalan denominator.
AVERAGES = {
    1: (1, 1),
    2: (3, 2),
    3: (9, 5),
    4: (28, 14),
    5: (90, 42),
    6: (297, 132),
    7: (1001, 429),
    8: (3432, 1430),
    9: (11934, 4862),
    10: (41990, 16796),
}


class TestDistExhaustive:
    @pytest.mark.parametrize("n", [1, 6, 10])
    def test_tables(self, n):
        assert list(dist_exhaustive(n).counts) == TABLES[n]

    def test_size_zero(self):
        d = dist_exhaustive(0)
        assert d.counts == () and d.total == 1

    def test_cap(self):
        with pytest.raises(CapExceeded):
            dist_exhaustive(15)


class TestDistRecurrence:
    @pytest.mark.parametrize("n", [2, 5, 9])
    def test_tables(self, n):
        assert list(dist_recurrence(n).counts) == TABLES[n]

    def test_n12_first_entry(self):
        assert dist_recurrence(12).count(1) == 58786 == catalan(11)

    def test_table_helper_consistent(self):
        table = dist_recurrence_table(20)
        for n in range(21):
            assert table[n].counts == dist_recurrence(n).counts


class TestDistSeries:
    @pytest.mark.parametrize("n", [1, 7])
    def test_tables(self, n):
        assert list(dist_series(n).counts) == TABLES[n]

    def test_n9_k6(self):
        assert dist_series(9).count(6) == 110

    def test_table_helper_consistent(self):
        table = dist_series_table(15)
        for n in range(16):
            assert table[n].counts == dist_series(n).counts


class TestDistClosed:
    def test_paper_spot_checks(self):
        assert dist_closed(7, 4) == 48
        assert dist_closed(8, 6) == 27

    def test_right_comb_unique(self):
        for n in range(1, 40):
            assert dist_closed(n, n) == 1

    def test_division_is_exact(self):
        import math

        for n in range(1, 60):
            for k in range(1, n + 1):
                assert k * math.comb(2 * n - k, n - k) % (2 * n - k) == 0

    @pytest.mark.parametrize("n,k", [(5, 0), (5, 6), (3, -1)])
    def test_domain(self, n, k):
        with pytest.raises(DomainError):
            dist_closed(n, k)


class TestRouteAgreement:
    def test_all_four_routes_small(self):
        for n in range(12):
            ex = dist_exhaustive(n).counts
            assert ex == dist_recurrence(n).counts
            assert ex == dist_series(n).counts
            assert ex == dist_closed_all(n).counts

    def test_three_routes_to_100(self):
        rec = dist_recurrence_table(100)
        ser = dist_series_table(100)
        for n in range(101):
            assert rec[n].counts == ser[n].counts == dist_closed_all(n).counts


class TestInvariants:
    def test_conservation(self):
        for dist in dist_recurrence_table(120)[1:]:
            assert sum(dist.counts) == catalan(dist.n) == dist.total

    def test_monotone_counts(self):
        for dist in dist_recurrence_table(60)[2:]:
            assert dist.counts[0] == dist.counts[1]
            for a, b in zip(dist.counts, dist.counts[1:]):
                assert a >= b
            assert dist.counts[-1] == 1


class TestWeightedSum:
    def test_paper_values(self):
        assert weighted_sum(9) == 11934
        assert weighted_sum(1) == 1

    def test_n12(self):
        assert weighted_sum(12) == 742900 - 208012 == catalan(13) - catalan(12)

    def test_catalan_difference_identity(self):
        for n in range(1, 80):
            assert weighted_sum(n) == catalan(n + 1) - catalan(n)

    def test_n0_rejected(self):
        with pytest.raises(DomainError):
            weighted_sum(0)


class TestAverage:
    @pytest.mark.parametrize("n", sorted(AVERAGES))
    def test_paper_fractions(self, n):
        num, den = AVERAGES[n]
        assert average(n) == Fraction(num, den)

    def test_closed_form(self):
        for n in range(1, 2001):
            assert average(n) == Fraction(3 * n, n + 2)

    def test_distance_to_three(self):
        for n in (10, 100, 1000, 10000):
            assert 3 - average(n) == Fraction(6, n + 2)

    def test_n0_rejected(self):
        with pytest.raises(DomainError):
            average(0)


class TestRenderDecimal:
    @pytest.mark.parametrize(
        "num,den,places,expected",
        [
            (90, 42, 2, "2.14"),
            (297, 132, 2, "2.25"),
            (1001, 429, 2, "2.33"),
            (11934, 4862, 2, "2.45"),
            (41990, 16796, 2, "2.50"),
            (1, 1, 2, "1.00"),
            (1, 16796, 6, "0.000060"),
            (-5, 2, 1, "-2.5"),
            (5, 2, 0, "2"),   # round half even, down
            (7, 2, 0, "4"),   # round half even, up
        ],
    )
    def test_values(self, num, den, places, expected):
        assert render_decimal(Fraction(num, den), places) == expected
