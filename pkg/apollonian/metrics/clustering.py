"""
Clustering coefficients.

Every vertex of degree k has local clustering d(2k-d-1)/(k(k-1)), so the
network average is determined by the degree histogram. clustering() measures
it directly by neighbourhood edge counts and via the per-degree formula, and
optionally compares with the limit Cl_d = sum_k p_k d(2k-d-1)/(k(k-1)).
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import networkx as nx
import numpy as np

from apollonian.generator.network import GraphState, clique_count
from apollonian.metrics.degrees import degree_histogram, theoretical_pk_array
from apollonian.metrics.distances import to_networkx

logger = logging.getLogger(__name__)

CLUSTERING_TRUNCATION = 10**7
_CHUNK = 10**6


@dataclass(frozen=True)
class ClusteringReport:
    direct: float
    formula: float
    theoretical: Optional[float] = None
    theoretical_error: Optional[float] = None


def local_coefficient(d: int, k) -> np.ndarray:
    k = np.asarray(k, dtype=float)
    return d * (2 * k - d - 1) / (k * (k - 1))


@lru_cache(maxsize=16)
def clustering_constant(d: int, truncation: int = CLUSTERING_TRUNCATION) -> tuple[float, float]:
    """
    (Cl_d summed over k = d+1..truncation, bound on the omitted tail).

    The local coefficient is at most 2d/k, so the tail is below
    (2d/K) sum_{k>K} p_k = 2 p_K A_K / K.
    """
    total = 0.0
    for start in range(d + 1, truncation + 1, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, truncation + 1), dtype=float)
        total += float(np.sum(theoretical_pk_array(d, ks) * local_coefficient(d, ks)))
    p_last = float(theoretical_pk_array(d, [truncation])[0])
    tail_bound = 2.0 * p_last * clique_count(d, truncation) / truncation
    return total, tail_bound


def clustering(state: GraphState, with_theory: bool = True, graph: Optional[nx.Graph] = None) -> ClusteringReport:
    graph = to_networkx(state) if graph is None else graph
    # Degree < 2 cannot occur: every vertex has degree >= d+1 >= 3.
    direct = float(nx.average_clustering(graph))
    hist = degree_histogram(state)
    degrees = np.array(list(hist.counts), dtype=float)
    weights = np.array(list(hist.counts.values()), dtype=float) / hist.total
    formula = float(np.sum(weights * local_coefficient(state.d, degrees)))
    if not with_theory:
        return ClusteringReport(direct=direct, formula=formula)
    value, tail = clustering_constant(state.d)
    logger.debug(f"Clustering d={state.d}: direct={direct:.6f} formula={formula:.6f} limit={value:.6f}")
    return ClusteringReport(direct=direct, formula=formula, theoretical=value, theoretical_error=tail)
