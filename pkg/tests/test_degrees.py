import math

import numpy as np
import pytest

from apollonian.errors import InvalidArgument
from apollonian.generator.network import clique_count, new_graph
from apollonian.metrics.degrees import (
    DEGREE_COLUMNS,
    DegreeHistogram,
    degree_histogram,
    degree_table,
    log_gamma_ratio,
    power_law_exponent,
    sup_deviation,
    tail_mass,
    theoretical_pk,
    theoretical_pk_array,
)
from tests.conftest import build


def d2_closed_form(k):
    return 24.0 / (k * (k + 1) * (k + 2))


class TestHistogram:
    def test_initial_graph(self):
        hist = degree_histogram(new_graph(2))
        assert hist.counts == {3: 4}
        assert hist.total == 4

    def test_after_one_step(self):
        hist = degree_histogram(build(2, ["1"]))
        assert hist.counts == {3: 2, 4: 3}
        assert hist.total == 5

    def test_counts_sum_to_vertices(self, ran_100):
        hist = degree_histogram(ran_100)
        assert sum(hist.counts.values()) == ran_100.n_vertices == 104
        assert min(hist.counts) >= 3


class TestLimitingLaw:
    def test_first_value(self):
        assert theoretical_pk(2, 3) == pytest.approx(0.4, rel=1e-14)
        assert theoretical_pk(5, 6) == pytest.approx(5 / 11, rel=1e-14)

    def test_d2_example(self):
        assert theoretical_pk(2, 5) == pytest.approx(4 / 35, rel=1e-13)

    def test_d2_closed_form(self):
        ks = np.array([3, 4, 10, 29, 30, 31, 100, 1_000, 100_000], dtype=float)
        np.testing.assert_allclose(theoretical_pk_array(2, ks), d2_closed_form(ks), rtol=1e-10)

    @pytest.mark.parametrize("d", [3, 4, 7])
    def test_stationary_recursion(self, d):
        ks = np.arange(d + 2, 3000)
        p = theoretical_pk_array(d, ks)
        p_prev = theoretical_pk_array(d, ks - 1)
        lhs = p * (d + clique_count(d, ks))
        rhs = p_prev * clique_count(d, ks - 1)
        np.testing.assert_allclose(lhs, rhs, rtol=1e-10)

    def test_sums_to_one(self):
        total = float(np.sum(theoretical_pk_array(3, np.arange(4, 200_000))))
        assert total + tail_mass(3, 199_999) == pytest.approx(1.0, abs=1e-10)

    def test_power_law_slope(self):
        slope = math.log(theoretical_pk(3, 10_000) / theoretical_pk(3, 1_000)) / math.log(10)
        assert slope == pytest.approx(-power_law_exponent(3), abs=0.01)
        assert power_law_exponent(3) == 2.5

    def test_tail_mass_d2(self):
        # sum_{j > k} 24/(j(j+1)(j+2)) = 12/((k+1)(k+2))
        for k in (3, 10, 500):
            assert tail_mass(2, k) == pytest.approx(12 / ((k + 1) * (k + 2)), rel=1e-12)

    @pytest.mark.parametrize("k", [0, 2])
    def test_undefined_below_d_plus_one(self, k):
        with pytest.raises(InvalidArgument):
            theoretical_pk(2, k)

    def test_log_gamma_ratio_branches_agree(self):
        below = log_gamma_ratio(np.array([29.999999]), 2.5)[0]
        above = log_gamma_ratio(np.array([30.0]), 2.5)[0]
        assert above == pytest.approx(below, rel=1e-6)


class TestDeviation:
    def test_initial_graph(self):
        assert sup_deviation(degree_histogram(new_graph(2))) == pytest.approx(0.6, rel=1e-14)
        assert sup_deviation(degree_histogram(new_graph(4))) == pytest.approx(1 - 4 / 9, rel=1e-14)

    def test_proportional_histogram(self):
        # p_3 and p_4 are matched exactly; the excess mass sits at k = 5.
        counts = {3: 400_000, 4: 200_000, 5: 400_000}
        hist = DegreeHistogram(counts=counts, total=1_000_000, d=2)
        assert sup_deviation(hist) == pytest.approx(abs(0.4 - 4 / 35), rel=1e-12)

    def test_table_matches_sup(self, ran_100):
        hist = degree_histogram(ran_100)
        table = degree_table(hist)
        assert list(table.columns) == DEGREE_COLUMNS
        assert table["k"].iloc[0] == 3
        assert table["k"].iloc[-1] == hist.max_degree + 1
        assert table["abs_diff"].max() == pytest.approx(sup_deviation(hist), rel=1e-14)

    def test_grown_graph_is_closer_than_the_start(self, ran_100):
        assert sup_deviation(degree_histogram(ran_100)) < 0.6
