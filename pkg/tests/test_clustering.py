import numpy as np
import pytest

from apollonian.generator.network import grow, new_graph
from apollonian.generator.schedule import QSchedule
from apollonian.generator.seeding import replicate_rng
from apollonian.metrics.clustering import ClusteringReport, clustering, clustering_constant, local_coefficient
from apollonian.models import GrowthModel


def test_newborn_vertex_coefficient_is_one():
    for d in (2, 3, 6):
        assert local_coefficient(d, d + 1) == pytest.approx(1.0)


def test_local_coefficient_decreases():
    values = local_coefficient(2, np.arange(3, 50))
    assert np.all(np.diff(values) < 0)


def test_initial_graph_is_a_clique():
    report = clustering(new_graph(2), with_theory=False)
    assert report.direct == pytest.approx(1.0)
    assert report.formula == pytest.approx(1.0)
    assert report.theoretical is None


@pytest.mark.parametrize("d, seed", [(2, 1), (3, 2), (5, 3)])
def test_direct_matches_degree_formula(d, seed):
    state = grow(new_graph(d), 300, None, replicate_rng(seed, 0))
    report = clustering(state, with_theory=False)
    assert abs(report.direct - report.formula) < 1e-12


def test_identity_holds_for_ean():
    state = grow(new_graph(2, GrowthModel.ean), 30, QSchedule(kind="harmonic", c=0.5), replicate_rng(4, 0))
    report = clustering(state, with_theory=False)
    assert abs(report.direct - report.formula) < 1e-12


def test_limit_constant_and_tail_bound():
    coarse, coarse_tail = clustering_constant(2, 10_000)
    fine, fine_tail = clustering_constant(2, 100_000)
    assert 0.7 < coarse < fine < 0.8
    assert fine - coarse <= coarse_tail
    assert fine_tail < coarse_tail


def test_report_carries_theory(ran_100):
    report = clustering(ran_100)
    assert isinstance(report, ClusteringReport)
    value, tail = clustering_constant(2)
    assert report.theoretical == value
    assert report.theoretical_error == tail
    assert tail < 1e-6
