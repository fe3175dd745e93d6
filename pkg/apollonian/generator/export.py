"""
Vertex table and edge list files for a grown network.

vertices.csv: id,code,generation,degree,birth_step   (root code "", corners "#i")
edges.csv:    u,v,type                              (u < v, type initial|forward|shortcut)

Rows are ordered by vertex id and by (u, v), so identical states give
byte-identical files regardless of active-clique storage order.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Union

import networkx as nx
import pandas as pd

from apollonian.errors import ExportError, InvalidArgument
from apollonian.generator.network import GraphState
from apollonian.models import EdgeType

logger = logging.getLogger(__name__)

VERTEX_COLUMNS = ["id", "code", "generation", "degree", "birth_step"]
EDGE_COLUMNS = ["u", "v", "type"]
VERTEX_FILE = "vertices.csv"
EDGE_FILE = "edges.csv"


@dataclass(frozen=True)
class ExportPaths:
    vertices: Path
    edges: Path


def edge_type(state: GraphState, u: int, v: int) -> EdgeType:
    a, b = state.vertices[u], state.vertices[v]
    if a.is_initial and b.is_initial:
        return EdgeType.initial
    if a.code is None or b.code is None:
        return EdgeType.shortcut
    short, long = (a.code, b.code) if len(a.code) < len(b.code) else (b.code, a.code)
    if len(long) == len(short) + 1 and long.symbols[:-1] == short.symbols:
        return EdgeType.forward
    return EdgeType.shortcut


def vertex_frame(state: GraphState) -> pd.DataFrame:
    rows = [
        {
            "id":         r.id,
            "code":       r.label,
            "generation": r.generation,
            "degree":     r.degree,
            "birth_step": r.birth_step,
        }
        for r in state.vertices
    ]
    return pd.DataFrame(rows, columns=VERTEX_COLUMNS)


def edge_frame(state: GraphState) -> pd.DataFrame:
    rows = []
    for u, neighbours in enumerate(state.adjacency):
        for v in sorted(neighbours):
            if v > u:
                rows.append({"u": u, "v": v, "type": edge_type(state, u, v).value})
    return pd.DataFrame(rows, columns=EDGE_COLUMNS)


def export(state: GraphState, sink: Union[str, Path]) -> ExportPaths:
    """Write vertices.csv and edges.csv into the directory `sink`."""
    sink = Path(sink)
    paths = ExportPaths(vertices=sink / VERTEX_FILE, edges=sink / EDGE_FILE)
    try:
        sink.mkdir(parents=True, exist_ok=True)
        vertex_frame(state).to_csv(paths.vertices, index=False, lineterminator="\n")
        edge_frame(state).to_csv(paths.edges, index=False, lineterminator="\n")
    except OSError as exc:
        raise ExportError(exc.filename or sink, exc.strerror) from exc
    logger.info(f"Exported {state.n_vertices} vertices and {state.edge_count} edges to {sink}")
    return paths


def read_export(source: Union[str, Path]) -> tuple[pd.DataFrame, pd.DataFrame]:
    """Read back (vertices, edges) written by export(); the root's empty code stays ''."""
    source = Path(source)
    frames = []
    for name, columns in ((VERTEX_FILE, VERTEX_COLUMNS), (EDGE_FILE, EDGE_COLUMNS)):
        path = source / name
        try:
            frame = pd.read_csv(path, dtype={"code": str, "type": str}, keep_default_na=False)
        except OSError as exc:
            raise ExportError(path, exc.strerror) from exc
        if list(frame.columns) != columns:
            raise ExportError(path, f"unexpected header {list(frame.columns)}")
        frames.append(frame)
    return frames[0], frames[1]


def adjacency_from_edges(edges: pd.DataFrame, n_vertices: int) -> list[set[int]]:
    adjacency: list[set[int]] = [set() for _ in range(n_vertices)]
    for u, v in zip(edges["u"].tolist(), edges["v"].tolist()):
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise InvalidArgument(f"edge ({u}, {v}) references a vertex outside 0..{n_vertices - 1}")
        adjacency[u].add(v)
        adjacency[v].add(u)
    return adjacency


# ---------------------------------------------------------------------------
# Graph file formats
# ---------------------------------------------------------------------------

GRAPH_WRITERS: dict[str, Callable[[nx.Graph, Path], None]] = {
    "graphml":  nx.write_graphml,
    "gexf":     nx.write_gexf,
    "edgelist": lambda graph, path: nx.write_edgelist(graph, path, data=["type"]),
    "adjlist":  nx.write_adjlist,
}


def graph_from_export(vertices: pd.DataFrame, edges: pd.DataFrame) -> nx.Graph:
    graph = nx.Graph()
    for row in vertices.itertuples(index=False):
        graph.add_node(
            int(row.id),
            code       = str(row.code),
            generation = int(row.generation),
            degree     = int(row.degree),
            birth_step = int(row.birth_step),
        )
    for row in edges.itertuples(index=False):
        u, v = int(row.u), int(row.v)
        if u not in graph or v not in graph:
            raise InvalidArgument(f"edge ({u}, {v}) references a vertex missing from the vertex table")
        graph.add_edge(u, v, type=str(row.type))
    return graph


def convert_export(source: Union[str, Path], target: Union[str, Path], fmt: str) -> nx.Graph:
    """Re-write an exported vertex/edge pair as a single graph file."""
    if fmt not in GRAPH_WRITERS:
        raise InvalidArgument(f"unknown graph format {fmt!r}; expected one of {sorted(GRAPH_WRITERS)}")
    graph = graph_from_export(*read_export(source))
    target = Path(target)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        GRAPH_WRITERS[fmt](graph, target)
    except OSError as exc:
        raise ExportError(exc.filename or target, exc.strerror) from exc
    logger.info(f"Wrote {fmt} graph with {graph.number_of_nodes()} nodes to {target}")
    return graph
