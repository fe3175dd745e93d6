"""
Shared fixtures: hand-built graphs with known distances and small grown graphs.
"""
import pytest

from apollonian.coding.codes import Code
from apollonian.generator.network import GraphState, fill_clique, grow, new_graph
from apollonian.generator.seeding import replicate_rng
from apollonian.models import GrowthModel

# The 8-step d=2 example: 132 and 3312 branch at the root.
TREE_EXAMPLE_FILLS = ["1", "13", "132", "3", "31", "33", "331", "3312"]

# 212 and 313 both have a truncated tail: the block formula gives 2, the graph 3.
FORMULA_COUNTEREXAMPLE_FILLS = ["2", "21", "212", "3", "31", "313"]


def build(d: int, fills: list[str]) -> GraphState:
    state = new_graph(d, check_births=True)
    for text in fills:
        fill_clique(state, Code.parse(text, d))
    return state


@pytest.fixture
def tree_example() -> GraphState:
    return build(2, TREE_EXAMPLE_FILLS)


@pytest.fixture
def counterexample() -> GraphState:
    return build(2, FORMULA_COUNTEREXAMPLE_FILLS)


@pytest.fixture
def rng():
    return replicate_rng(20240611, 0)


@pytest.fixture
def ran_100() -> GraphState:
    state = new_graph(2, GrowthModel.ran, check_births=True)
    return grow(state, 100, None, replicate_rng(7, 0))


@pytest.fixture
def ran_d3() -> GraphState:
    state = new_graph(3, GrowthModel.ran, check_births=True)
    return grow(state, 120, None, replicate_rng(11, 0))
