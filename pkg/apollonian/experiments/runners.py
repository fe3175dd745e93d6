"""
Monte Carlo experiments, one per limit theorem under test.

Every `_x_replicate(config, r)` is a top-level function so the process pool
can ship it to workers; `run_x(config)` joins the replicates and summarizes.
Standardizations always use the theory module's constants.
"""
import logging
import math
from typing import Callable

import numpy as np

from apollonian.coding.codes import Code
from apollonian.coding.distance import code_distance, prefix_distance
from apollonian.experiments.config import ENVELOPE_NOTE, ExperimentConfig, ExperimentResult
from apollonian.experiments.harness import run_replicates
from apollonian.experiments.stats import ks_statistic, standardize, summarize
from apollonian.generator.clique_tree import CliqueTree
from apollonian.generator.network import (
    GraphState,
    ean_growth_ratio,
    grow,
    new_graph,
    sample_size_biased_vertex,
)
from apollonian.generator.seeding import replicate_rng
from apollonian.metrics.clustering import clustering, clustering_constant
from apollonian.metrics.degrees import degree_histogram, sup_deviation
from apollonian.metrics.distances import (
    all_vertex_pairs,
    diameter,
    distance_sample,
    flooding,
    sample_vertex_pairs,
    to_networkx,
    vertex_code,
)
from apollonian.models import ExperimentKind, GrowthModel
from apollonian.theory.constants import c_tilde, ean_hop_clt, ean_lineage_center, hop_clt_constants
from apollonian.theory.diameter import solve_diameter

logger = logging.getLogger(__name__)

HOP_COLUMNS = ["replicate", "n", "hop", "standardized"]
DEGREE_COLUMNS = ["replicate", "n", "vertices", "sup_deviation", "envelope"]
EAN_DEGREE_COLUMNS = DEGREE_COLUMNS + ["added_nodes", "growth_ratio"]
DEPTH_COLUMNS = ["replicate", "n", "max_generation", "uniform_generation", "max_ratio", "uniform_ratio"]
CLUSTERING_COLUMNS = ["replicate", "n", "direct", "formula", "abs_diff"]
ORACLE_COLUMNS = [
    "replicate", "pair_id", "code_u", "code_v", "gen_u", "gen_v",
    "ancestor_gen", "code_dist", "bfs_dist", "exact_dist",
]
DIAMETER_COLUMNS = ["replicate", "n", "vertices", "diameter", "flooding", "diam_ratio", "flood_ratio"]

CLUSTERING_IDENTITY_TOLERANCE = 1e-9
MAX_REPORTED_WITNESSES = 10


def _ratio(value: float, n: int) -> float:
    return value / math.log(n) if n > 1 else math.nan


def _hop(config: ExperimentConfig, a: Code, b: Code) -> int:
    return code_distance(a, b) if config.distance == "blocks" else prefix_distance(a, b)


def _grown_graph(config: ExperimentConfig, replicate: int) -> tuple[GraphState, np.random.Generator]:
    rng = replicate_rng(config.master_seed, replicate)
    model = GrowthModel.ean if config.is_ean else GrowthModel.ran
    state = grow(new_graph(config.d, model), config.n, config.schedule, rng)
    return state, rng


def _metadata(config: ExperimentConfig, **extra) -> dict:
    metadata = {"envelope_note": ENVELOPE_NOTE}
    if config.schedule is not None:
        metadata["schedule"] = config.schedule.label
    metadata.update(extra)
    return metadata


# ---------------------------------------------------------------------------
# Hopcount CLT (RAN and EAN)
# ---------------------------------------------------------------------------

def _hop_rows(
    config: ExperimentConfig,
    replicate: int,
    tree: CliqueTree,
    rng: np.random.Generator,
    center: float,
    variance: float,
) -> list[dict]:
    rows = []
    for _ in range(config.pairs_per_graph):
        a = tree.code(tree.sample_active(rng))
        b = tree.code(tree.sample_active(rng))
        hop = _hop(config, a, b)
        rows.append(
            {
                "replicate":    replicate,
                "n":            config.n,
                "hop":          hop,
                "standardized": standardize(hop, center, variance),
            }
        )
    return rows


def _hopclt_replicate(config: ExperimentConfig, replicate: int) -> list[dict]:
    rng = replicate_rng(config.master_seed, replicate)
    tree = CliqueTree(config.d).grow_ran(config.n, rng)
    mean_coeff, var_coeff = hop_clt_constants(config.d)
    log_n = math.log(config.n)
    return _hop_rows(config, replicate, tree, rng, mean_coeff * log_n, var_coeff * log_n)


def _ean_hop_replicate(config: ExperimentConfig, replicate: int) -> list[dict]:
    rng = replicate_rng(config.master_seed, replicate)
    tree = CliqueTree(config.d).grow_ean(config.n, config.schedule, rng)
    center, variance = ean_hop_clt(config.schedule, config.n, config.d)
    return _hop_rows(config, replicate, tree, rng, center, variance)


def _hop_stats(rows: list[dict], center: float, variance: float) -> dict:
    hops = summarize(r["hop"] for r in rows)
    standardized = [r["standardized"] for r in rows if math.isfinite(r["standardized"])]
    return {
        "hop":             hops,
        "center":          center,
        "variance":        variance,
        "mean_over_center": hops["mean"] / center if center > 0 else None,
        "ks":              ks_statistic(standardized) if standardized else None,
    }


def _hop_metadata(config: ExperimentConfig) -> dict:
    extra = {"distance": config.distance, "pairs_per_graph": config.pairs_per_graph, "fast_mode": config.fast_mode}
    if config.fast_mode:
        extra["caveat"] = "several pairs share one graph; hop samples are not independent"
    return _metadata(config, **extra)


def run_hopclt(config: ExperimentConfig) -> ExperimentResult:
    rows = run_replicates(_hopclt_replicate, config)
    mean_coeff, var_coeff = hop_clt_constants(config.d)
    log_n = math.log(config.n)
    stats = _hop_stats(rows, mean_coeff * log_n, var_coeff * log_n)
    stats.update(
        {
            "mean_coeff":      mean_coeff,
            "var_coeff":       var_coeff,
            "mean_over_log_n": _ratio(stats["hop"]["mean"], config.n),
        }
    )
    return ExperimentResult(config=config, columns=HOP_COLUMNS, rows=rows, stats=stats, metadata=_hop_metadata(config))


def run_ean_hop(config: ExperimentConfig) -> ExperimentResult:
    rows = run_replicates(_ean_hop_replicate, config)
    center, variance = ean_hop_clt(config.schedule, config.n, config.d)
    stats = _hop_stats(rows, center, variance)
    lineage = ean_lineage_center(config.schedule, config.n, config.d)
    stats.update(
        {
            "lineage_center":           lineage,
            "mean_over_lineage_center": stats["hop"]["mean"] / lineage if lineage > 0 else None,
        }
    )
    return ExperimentResult(config=config, columns=HOP_COLUMNS, rows=rows, stats=stats, metadata=_hop_metadata(config))


# ---------------------------------------------------------------------------
# Degree law
# ---------------------------------------------------------------------------

def _degree_replicate(config: ExperimentConfig, replicate: int) -> list[dict]:
    state, _ = _grown_graph(config, replicate)
    size = state.n_vertices if config.is_ean else config.n
    row = {
        "replicate":     replicate,
        "n":             config.n,
        "vertices":      state.n_vertices,
        "sup_deviation": sup_deviation(degree_histogram(state)),
        "envelope":      math.sqrt(math.log(size) / size),
    }
    if config.is_ean:
        row["added_nodes"] = state.added_nodes
        row["growth_ratio"] = ean_growth_ratio(state, config.schedule)
    return [row]


def run_degree(config: ExperimentConfig) -> ExperimentResult:
    rows = run_replicates(_degree_replicate, config)
    deviations = summarize(r["sup_deviation"] for r in rows)
    envelopes = summarize(r["envelope"] for r in rows)
    stats = {
        "sup_deviation":      deviations,
        "envelope":           envelopes,
        "median_over_envelope": (
            deviations["median"] / envelopes["median"] if envelopes["median"] else None
        ),
    }
    if config.is_ean:
        stats["growth_ratio"] = summarize(r["growth_ratio"] for r in rows)
    columns = EAN_DEGREE_COLUMNS if config.is_ean else DEGREE_COLUMNS
    return ExperimentResult(config=config, columns=columns, rows=rows, stats=stats, metadata=_metadata(config))


# ---------------------------------------------------------------------------
# Depth
# ---------------------------------------------------------------------------

def _depth_replicate(config: ExperimentConfig, replicate: int) -> list[dict]:
    rng = replicate_rng(config.master_seed, replicate)
    tree = CliqueTree(config.d).grow_ran(config.n, rng)
    deepest = tree.max_vertex_generation
    # Generation of the vertex the uniform clique would receive.
    uniform = int(tree.generation[tree.sample_active(rng)])
    return [
        {
            "replicate":          replicate,
            "n":                  config.n,
            "max_generation":     deepest,
            "uniform_generation": uniform,
            "max_ratio":          _ratio(deepest, config.n),
            "uniform_ratio":      _ratio(uniform, config.n),
        }
    ]


def run_depth(config: ExperimentConfig) -> ExperimentResult:
    rows = run_replicates(_depth_replicate, config)
    c = c_tilde(config.d)
    typical = (config.d + 1) / config.d
    max_ratio = summarize(r["max_ratio"] for r in rows)
    uniform_ratio = summarize(r["uniform_ratio"] for r in rows)
    stats = {
        "max_ratio":            max_ratio,
        "uniform_ratio":        uniform_ratio,
        "c_tilde":              c,
        "typical_depth_coeff":  typical,
        "max_ratio_over_c_tilde": max_ratio["median"] / c if max_ratio["median"] is not None else None,
        "uniform_ratio_over_coeff": (
            uniform_ratio["median"] / typical if uniform_ratio["median"] is not None else None
        ),
    }
    failures = [
        f"replicate {r['replicate']}: uniform clique generation {r['uniform_generation']} "
        f"exceeds max vertex generation {r['max_generation']} + 1"
        for r in rows
        if r["uniform_generation"] > r["max_generation"] + 1
    ]
    return ExperimentResult(
        config=config, columns=DEPTH_COLUMNS, rows=rows, stats=stats, failures=failures, metadata=_metadata(config)
    )


# ---------------------------------------------------------------------------
# Clustering
# ---------------------------------------------------------------------------

def _clustering_replicate(config: ExperimentConfig, replicate: int) -> list[dict]:
    state, _ = _grown_graph(config, replicate)
    report = clustering(state, with_theory=False)
    return [
        {
            "replicate": replicate,
            "n":         config.n,
            "direct":    report.direct,
            "formula":   report.formula,
            "abs_diff":  abs(report.direct - report.formula),
        }
    ]


def run_clustering(config: ExperimentConfig) -> ExperimentResult:
    rows = run_replicates(_clustering_replicate, config)
    limit, tail = clustering_constant(config.d)
    direct = summarize(r["direct"] for r in rows)
    stats = {
        "direct":               direct,
        "max_identity_gap":     max(r["abs_diff"] for r in rows),
        "limit":                limit,
        "limit_tail_bound":     tail,
        "mean_minus_limit":     direct["mean"] - limit,
    }
    failures = [
        f"replicate {r['replicate']}: direct clustering {r['direct']!r} != per-degree formula {r['formula']!r}"
        for r in rows
        if r["abs_diff"] > CLUSTERING_IDENTITY_TOLERANCE
    ]
    return ExperimentResult(
        config=config, columns=CLUSTERING_COLUMNS, rows=rows, stats=stats, failures=failures, metadata=_metadata(config)
    )


# ---------------------------------------------------------------------------
# Distance formula vs. BFS
# ---------------------------------------------------------------------------

def _dist_oracle_replicate(config: ExperimentConfig, replicate: int) -> list[dict]:
    state, rng = _grown_graph(config, replicate)
    if config.pairs is None:
        pairs = all_vertex_pairs(state)
    else:
        pairs = sample_vertex_pairs(state, config.pairs, rng)
    sample = distance_sample(state, pairs, to_networkx(state))
    rows = []
    for (a, b), record in zip(pairs, sample.to_dict("records")):
        code_a, code_b = vertex_code(state, a), vertex_code(state, b)
        record["replicate"] = replicate
        record["code_u"] = str(code_a)
        record["code_v"] = str(code_b)
        record["exact_dist"] = prefix_distance(code_a, code_b) if config.exact_check else None
        rows.append({column: record[column] for column in ORACLE_COLUMNS})
    return rows


def run_dist_oracle(config: ExperimentConfig) -> ExperimentResult:
    rows = run_replicates(_dist_oracle_replicate, config)
    witnesses = [r for r in rows if r["code_dist"] != r["bfs_dist"]]
    exact_misses = [r for r in rows if r["exact_dist"] is not None and r["exact_dist"] != r["bfs_dist"]]
    checked = sum(1 for r in rows if r["exact_dist"] is not None)
    total = len(rows)
    stats = {
        "pairs":                total,
        "agreements":           total - len(witnesses),
        "agreement_rate":       (total - len(witnesses)) / total if total else None,
        "max_abs_discrepancy":  max((abs(r["code_dist"] - r["bfs_dist"]) for r in rows), default=0),
        "first_witness":        _witness_text(witnesses[0]) if witnesses else None,
        "exact_checked":        checked,
        "exact_agreements":     checked - len(exact_misses),
    }
    failures = []
    if witnesses:
        logger.warning(f"distance formula disagrees with BFS on {len(witnesses)} of {total} pairs")
        failures.append(f"code_distance != bfs_distance on {len(witnesses)} of {total} pairs")
        failures.extend(_witness_text(r) for r in witnesses[:MAX_REPORTED_WITNESSES])
    if exact_misses:
        failures.append(f"prefix_distance != bfs_distance on {len(exact_misses)} pairs")
        failures.extend(_witness_text(r, "exact_dist") for r in exact_misses[:MAX_REPORTED_WITNESSES])
    return ExperimentResult(
        config=config, columns=ORACLE_COLUMNS, rows=rows, stats=stats, failures=failures, metadata=_metadata(config)
    )


def _witness_text(row: dict, column: str = "code_dist") -> str:
    return (
        f"replicate {row['replicate']} pair {row['pair_id']}: u={row['code_u']!r} v={row['code_v']!r} "
        f"{column}={row[column]} bfs_dist={row['bfs_dist']}"
    )


# ---------------------------------------------------------------------------
# Diameter and flooding (exploratory)
# ---------------------------------------------------------------------------

def _diameter_replicate(config: ExperimentConfig, replicate: int) -> list[dict]:
    state, rng = _grown_graph(config, replicate)
    graph = to_networkx(state)
    diam = diameter(state, graph)
    flood = flooding(state, sample_size_biased_vertex(state, rng), graph)
    return [
        {
            "replicate":   replicate,
            "n":           config.n,
            "vertices":    state.n_vertices,
            "diameter":    diam,
            "flooding":    flood,
            "diam_ratio":  _ratio(diam, config.n),
            "flood_ratio": _ratio(flood, config.n),
        }
    ]


def run_diameter(config: ExperimentConfig) -> ExperimentResult:
    rows = run_replicates(_diameter_replicate, config)
    bundle = solve_diameter(config.d)
    stats = {
        "diam_ratio":  summarize(r["diam_ratio"] for r in rows),
        "flood_ratio": summarize(r["flood_ratio"] for r in rows),
        "diam_const":  bundle.diam_const,
        "flood_const": bundle.flood_const,
    }
    return ExperimentResult(
        config=config, columns=DIAMETER_COLUMNS, rows=rows, stats=stats,
        metadata=_metadata(config, exploratory=True),
    )


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

RUNNERS: dict[ExperimentKind, Callable[[ExperimentConfig], ExperimentResult]] = {
    ExperimentKind.hopclt:      run_hopclt,
    ExperimentKind.ean_hop:     run_ean_hop,
    ExperimentKind.degree:      run_degree,
    ExperimentKind.ean_degree:  run_degree,
    ExperimentKind.depth:       run_depth,
    ExperimentKind.clustering:  run_clustering,
    ExperimentKind.dist_oracle: run_dist_oracle,
    ExperimentKind.diameter:    run_diameter,
}


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    logger.info(
        f"Running {config.kind.value}: d={config.d} n={config.n} "
        f"replicates={config.replicates} seed={config.master_seed}"
    )
    result = RUNNERS[config.kind](config)
    if result.failures:
        logger.warning(f"{config.kind.value}: {len(result.failures)} failure line(s); first: {result.failures[0]}")
    return result
