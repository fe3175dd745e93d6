"""
Graph distances: breadth-first search over the explicit adjacency (the oracle),
flooding time, diameter, and code-vs-BFS distance samples.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import networkx as nx
import numpy as np
import pandas as pd

from apollonian.coding.codes import Code
from apollonian.coding.distance import code_distance, common_ancestor
from apollonian.errors import InvalidArgument, SizeGuardExceeded
from apollonian.generator.network import GraphState

logger = logging.getLogger(__name__)

DIAMETER_GUARD = 20_000
DISTANCE_COLUMNS = ["pair_id", "gen_u", "gen_v", "ancestor_gen", "code_dist", "bfs_dist"]


@dataclass(frozen=True)
class DistanceReport:
    u: str
    v: str
    code_based: int
    bfs: Optional[int] = None

    @property
    def agreement(self) -> Optional[bool]:
        return None if self.bfs is None else self.code_based == self.bfs


def to_networkx(state: GraphState) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(state.n_vertices))
    graph.add_edges_from(
        (u, v) for u, neighbours in enumerate(state.adjacency) for v in neighbours if u < v
    )
    return graph


def _check_vertex(state: GraphState, vid: int) -> None:
    if not 0 <= vid < state.n_vertices:
        raise InvalidArgument(f"vertex id {vid} outside 0..{state.n_vertices - 1}")


def vertex_code(state: GraphState, vid: int) -> Code:
    _check_vertex(state, vid)
    code = state.vertices[vid].code
    if code is None:
        raise InvalidArgument(f"vertex {vid} is a corner and has no code")
    return code


def bfs_distance(state: GraphState, a: int, b: int, graph: Optional[nx.Graph] = None) -> int:
    _check_vertex(state, a)
    _check_vertex(state, b)
    if a == b:
        return 0
    graph = to_networkx(state) if graph is None else graph
    return nx.shortest_path_length(graph, a, b)


def flooding(state: GraphState, a: int, graph: Optional[nx.Graph] = None) -> int:
    """Largest BFS distance from vertex a."""
    _check_vertex(state, a)
    graph = to_networkx(state) if graph is None else graph
    return max(nx.single_source_shortest_path_length(graph, a).values())


def diameter(state: GraphState, graph: Optional[nx.Graph] = None, guard: int = DIAMETER_GUARD) -> int:
    """Exact diameter by one BFS per vertex; refuses graphs above the guard."""
    if state.n_vertices > guard:
        raise SizeGuardExceeded(state.n_vertices, guard)
    graph = to_networkx(state) if graph is None else graph
    return nx.diameter(graph)


def compare_pair(state: GraphState, a: int, b: int, graph: Optional[nx.Graph] = None) -> DistanceReport:
    code_a, code_b = vertex_code(state, a), vertex_code(state, b)
    return DistanceReport(
        u=str(code_a),
        v=str(code_b),
        code_based=code_distance(code_a, code_b),
        bfs=bfs_distance(state, a, b, graph),
    )


def coded_vertices(state: GraphState) -> list[int]:
    """Ids of every vertex born during growth."""
    return [r.id for r in state.vertices if not r.is_initial]


def all_vertex_pairs(state: GraphState) -> list[tuple[int, int]]:
    ids = coded_vertices(state)
    return [(a, b) for i, a in enumerate(ids) for b in ids[i + 1:]]


def sample_vertex_pairs(state: GraphState, count: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """`count` independent uniform pairs of born vertices (a pair may repeat a vertex)."""
    ids = np.asarray(coded_vertices(state))
    if ids.size == 0:
        return []
    draws = rng.integers(ids.size, size=(count, 2))
    return [(int(ids[i]), int(ids[j])) for i, j in draws]


def distance_sample(
    state: GraphState,
    pairs: Sequence[tuple[int, int]],
    graph: Optional[nx.Graph] = None,
) -> pd.DataFrame:
    """Code-based and BFS distance for each pair, one BFS per distinct source."""
    graph = to_networkx(state) if graph is None else graph
    bfs = [0] * len(pairs)
    order = sorted(range(len(pairs)), key=lambda i: pairs[i][0])
    source, lengths = None, {}
    for i in order:
        a, b = pairs[i]
        if a != source:
            source, lengths = a, nx.single_source_shortest_path_length(graph, a)
        bfs[i] = lengths[b]

    rows = []
    for pair_id, ((a, b), hops) in enumerate(zip(pairs, bfs)):
        code_a, code_b = vertex_code(state, a), vertex_code(state, b)
        ancestor, _, _ = common_ancestor(code_a, code_b)
        rows.append(
            {
                "pair_id":      pair_id,
                "gen_u":        len(code_a),
                "gen_v":        len(code_b),
                "ancestor_gen": len(ancestor),
                "code_dist":    code_distance(code_a, code_b),
                "bfs_dist":     hops,
            }
        )
    return pd.DataFrame(rows, columns=DISTANCE_COLUMNS)


def disagreements(sample: pd.DataFrame) -> pd.DataFrame:
    return sample[sample["code_dist"] != sample["bfs_dist"]]


def pair_reports(state: GraphState, pairs: Iterable[tuple[int, int]], sample: pd.DataFrame) -> list[DistanceReport]:
    pairs = list(pairs)
    return [
        DistanceReport(
            u=str(vertex_code(state, pairs[row.pair_id][0])),
            v=str(vertex_code(state, pairs[row.pair_id][1])),
            code_based=int(row.code_dist),
            bfs=int(row.bfs_dist),
        )
        for row in sample.itertuples(index=False)
    ]
