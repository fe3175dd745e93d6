import numpy as np
import pytest
from scipy import stats

from apollonian.coding.blocks import (
    block_count,
    decompose,
    has_truncated_block,
    max_hop,
    min_blocks_oracle,
)
from apollonian.coding.codes import Code
from apollonian.errors import InvalidArgument
from apollonian.theory.coupon import yd_pmf

LONG = "113213323122221131"


def c(text: str, d: int = 2) -> Code:
    return Code.parse(text, d)


@pytest.mark.parametrize("code, expected", [("123123", 3), ("11", 2), (LONG, 5)])
def test_max_hop(code, expected):
    assert max_hop(c(code)) == expected


def test_max_hop_of_root():
    with pytest.raises(InvalidArgument):
        max_hop(Code.root(2))


@pytest.mark.parametrize("code, expected", [(LONG, 5), ("", 0), ("123123", 2), ("11", 1)])
def test_block_count(code, expected):
    assert block_count(c(code)) == expected


def test_decompose_long_code():
    blocks = decompose(c(LONG))
    assert [str(b) for b in blocks.blocks] == ["1", "132", "1332", "31222", "21131"]
    assert blocks.count == block_count(c(LONG))


def test_truncated_block():
    assert has_truncated_block(c(LONG))
    assert not has_truncated_block(c("123123"))
    assert not has_truncated_block(Code.root(2))


class TestOracle:
    def test_long_code(self):
        assert min_blocks_oracle(c(LONG)) == 5

    def test_repeated_symbol(self):
        assert min_blocks_oracle(c("11")) == 2
        assert min_blocks_oracle(c("11"), leftmost_unrestricted=True) == 1

    @pytest.mark.parametrize("flag", [False, True])
    def test_single_symbol(self, flag):
        assert min_blocks_oracle(c("1"), leftmost_unrestricted=flag) == 1

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_greedy_is_optimal(self, d):
        rng = np.random.default_rng(d)
        for _ in range(300):
            length = int(rng.integers(1, 25))
            code = Code.of(rng.integers(1, d + 2, size=length), d)
            assert block_count(code) == min_blocks_oracle(code, leftmost_unrestricted=True)
            if not has_truncated_block(code):
                assert block_count(code) == min_blocks_oracle(code)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_prefix_block_count_is_bounded(d):
    rng = np.random.default_rng(10 + d)
    for _ in range(200):
        code = Code.of(rng.integers(1, d + 2, size=int(rng.integers(1, 40))), d)
        total = block_count(code)
        for k in range(len(code) + 1):
            assert block_count(code.prefix(k)) <= total + 1


def test_max_hop_law_is_truncated_coupon_time():
    d, k, draws = 2, 50, 20_000
    rng = np.random.default_rng(2024)
    hops = np.array([max_hop(Code.of(rng.integers(1, d + 2, size=k), d)) for _ in range(draws)])
    law = yd_pmf(d, k)
    observed = np.append(np.bincount(hops, minlength=k + 1)[3:21], np.sum(hops > 20))
    expected = np.append(law[3:21], law[21:].sum())
    assert hops.min() >= d + 1
    assert stats.chisquare(observed, draws * expected / expected.sum()).pvalue > 1e-3
