import numpy as np
import pytest

from apollonian.coding.blocks import block_count
from apollonian.coding.codes import Code
from apollonian.errors import InvalidArgument
from apollonian.generator.schedule import QSchedule
from apollonian.generator.seeding import make_rng
from apollonian.theory.samplers import (
    gm_moments,
    gm_probabilities,
    renewal_hk,
    sample_gm,
    sample_gm_ean,
    sample_yd,
)


def test_gm_first_indicator_is_certain():
    assert gm_moments(2, 1) == (1.0, 0.0)
    assert gm_probabilities(3, 2).tolist() == [1.0, pytest.approx(4 / 7)]


def test_gm_mean_grows_like_log():
    mean, _ = gm_moments(2, 10**6)
    assert mean / (1.5 * np.log(10**6)) == pytest.approx(1.0, abs=0.06)


def test_sample_gm_moments():
    rng = make_rng(1)
    draws = sample_gm(2, 1000, rng, size=20_000)
    mean, variance = gm_moments(2, 1000)
    assert draws.shape == (20_000,)
    assert abs(draws.mean() - mean) < 4 * np.sqrt(variance / draws.size)
    assert draws.var() == pytest.approx(variance, rel=0.05)


def test_sample_gm_scalar_and_guard():
    assert isinstance(sample_gm(2, 5, make_rng(2)), int)
    with pytest.raises(InvalidArgument):
        sample_gm(2, 0, make_rng(2))


def test_sample_gm_ean_full_occupation():
    draws = sample_gm_ean(QSchedule(kind="constant", q=1.0), 12, make_rng(3), size=10)
    assert draws.tolist() == [12] * 10


def test_sample_yd_moments():
    draws = sample_yd(2, make_rng(4), size=100_000)
    assert draws.min() >= 3
    assert draws.mean() == pytest.approx(5.5, abs=0.05)
    assert draws.var() == pytest.approx(6.75, rel=0.05)


def test_renewal_below_one_block():
    rng = make_rng(5)
    assert renewal_hk(2, 0, rng) == 0
    assert renewal_hk(2, 2, rng, size=50).tolist() == [0] * 50
    with pytest.raises(InvalidArgument):
        renewal_hk(2, -1, rng)


def test_renewal_with_leftover_matches_block_count():
    k, size = 30, 6000
    rng = make_rng(6)
    renewal = renewal_hk(2, k, rng, size=size, include_leftover=True)
    codes = rng.integers(1, 4, size=(size, k))
    blocks = np.array([block_count(Code.of(row, 2)) for row in codes])
    assert abs(renewal.mean() - blocks.mean()) < 0.1
    assert abs(renewal.var() - blocks.var()) < 0.25


def test_renewal_mean_grows_linearly():
    draws = renewal_hk(3, 2000, make_rng(7), size=300)
    mu = 4 * (1 + 1 / 2 + 1 / 3 + 1 / 4)
    assert draws.mean() == pytest.approx(2000 / mu, rel=0.03)
