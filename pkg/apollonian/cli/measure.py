"""
`degrees` and `distances` subcommands: measure one grown graph.
"""
import argparse
import sys
from pathlib import Path
from typing import Optional

import pandas as pd

from apollonian.cli.common import add_growth_arguments, emit_json, grow_from_args, positive_int
from apollonian.errors import ExportError, SizeGuardExceeded
from apollonian.generator.seeding import replicate_rng
from apollonian.metrics.degrees import degree_histogram, degree_table, sup_deviation
from apollonian.metrics.distances import (
    DIAMETER_GUARD,
    all_vertex_pairs,
    disagreements,
    distance_sample,
    sample_vertex_pairs,
)


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    degrees = subparsers.add_parser(
        "degrees", parents=[parent],
        help="empirical degree proportions against the limiting law p_k",
    )
    add_growth_arguments(degrees)
    degrees.add_argument("--out", type=Path, default=None,
                         help="CSV file for the k,empirical,theoretical,abs_diff table (default stdout)")
    degrees.set_defaults(handler=degrees_command)

    distances = subparsers.add_parser(
        "distances", parents=[parent],
        help="code-based distance against breadth-first search on vertex pairs",
    )
    add_growth_arguments(distances)
    distances.add_argument("--pairs", type=positive_int, default=None,
                           help="number of sampled vertex pairs (default: all pairs)")
    distances.add_argument("--out", type=Path, default=None,
                           help="CSV file for the per-pair table (default stdout)")
    distances.set_defaults(handler=distances_command)


def _write_table(frame: pd.DataFrame, out: Optional[Path]) -> None:
    if out is None:
        frame.to_csv(sys.stdout, index=False, lineterminator="\n")
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(out, index=False, lineterminator="\n")
    except OSError as exc:
        raise ExportError(out, exc.strerror) from exc


def degrees_command(args: argparse.Namespace) -> int:
    state = grow_from_args(args)
    hist = degree_histogram(state)
    _write_table(degree_table(hist), args.out)
    if args.out is not None:
        emit_json(
            {
                "vertices":      hist.total,
                "max_degree":    hist.max_degree,
                "sup_deviation": sup_deviation(hist),
                "table":         str(args.out),
            }
        )
    return 0


def distances_command(args: argparse.Namespace) -> int:
    state = grow_from_args(args)
    if state.n_vertices > DIAMETER_GUARD:
        raise SizeGuardExceeded(state.n_vertices, DIAMETER_GUARD)
    if args.pairs is None:
        pairs = all_vertex_pairs(state)
    else:
        # Stream 1 of the seed; stream 0 grew the graph.
        pairs = sample_vertex_pairs(state, args.pairs, replicate_rng(args.seed, 1))
    sample = distance_sample(state, pairs)
    _write_table(sample, args.out)
    if args.out is not None:
        emit_json(
            {
                "pairs":         len(sample),
                "disagreements": len(disagreements(sample)),
                "table":         str(args.out),
            }
        )
    return 0
