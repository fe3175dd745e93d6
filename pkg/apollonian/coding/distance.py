"""
Distances computed from codes alone.

code_distance is the climb-and-meet formula: hops needed to climb each tail
down to the common ancestor. prefix_distance is exact: it searches the small
graph spanned by the prefixes of both codes, which always contains a shortest
path between them.
"""
from itertools import combinations

import networkx as nx

from apollonian.coding.blocks import block_count
from apollonian.coding.codes import Code, Corner, upward_labels
from apollonian.errors import InvalidArgument


def _same_alphabet(a: Code, b: Code) -> None:
    if a.dim != b.dim:
        raise InvalidArgument(f"codes over different alphabets: d={a.dim} and d={b.dim}")


def common_ancestor(a: Code, b: Code) -> tuple[Code, Code, Code]:
    """(longest common prefix, tail of a, tail of b)."""
    _same_alphabet(a, b)
    limit = min(len(a), len(b))
    k = 0
    while k < limit and a.symbols[k] == b.symbols[k]:
        k += 1
    return a.prefix(k), a.suffix(k), b.suffix(k)


def code_distance(a: Code, b: Code) -> int:
    """block_count(a_tail) + block_count(b_tail)."""
    _, a_tail, b_tail = common_ancestor(a, b)
    return block_count(a_tail) + block_count(b_tail)


def prefix_graph(*codes: Code) -> nx.Graph:
    """
    Initial K_{d+2} plus every prefix w of the given codes joined to T_i(w).

    Vertices are Code and Corner values. A shortest path between two of the
    codes never leaves this graph: its deepest outside vertex would have both
    path neighbours among its own clique members, which are adjacent.
    """
    if not codes:
        raise InvalidArgument("prefix_graph needs at least one code")
    dim = codes[0].dim
    graph = nx.Graph()
    initial = [Code.root(dim)] + [Corner(i) for i in range(1, dim + 2)]
    graph.add_edges_from(combinations(initial, 2))
    for code in codes:
        for length in range(1, len(code) + 1):
            vertex = code.prefix(length)
            graph.add_edges_from((vertex, label) for label in upward_labels(vertex))
    return graph


def prefix_distance(a: Code, b: Code) -> int:
    """Exact hop count between the vertices (or would-be vertices) coded a and b."""
    _same_alphabet(a, b)
    if a == b:
        return 0
    return nx.shortest_path_length(prefix_graph(a, b), a, b)
