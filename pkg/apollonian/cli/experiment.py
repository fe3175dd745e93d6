"""
`experiment` and `runs` subcommands: Monte Carlo runs and the run ledger.
"""
import argparse
import logging
from pathlib import Path

from apollonian.cli.common import dimension, emit_json, non_negative_int, positive_int, schedule, seed
from apollonian.database import list_runs, record_run
from apollonian.experiments.config import ExperimentConfig
from apollonian.experiments.harness import summary_json, write_outputs
from apollonian.experiments.runners import run_experiment
from apollonian.models import ExperimentKind

logger = logging.getLogger(__name__)


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    experiment = subparsers.add_parser(
        "experiment", parents=[parent],
        help="run a replicated Monte Carlo experiment; exit 1 if any check fails",
    )
    experiment.add_argument("--kind", choices=[k.value for k in ExperimentKind], required=True,
                            help="which limit statement to test")
    experiment.add_argument("--dim", type=dimension, default=2, help="simplex dimension d >= 2 (default 2)")
    experiment.add_argument("--steps", type=positive_int, required=True, help="growth steps n per replicate")
    experiment.add_argument("--replicates", type=positive_int, default=1, help="independent replicates (default 1)")
    experiment.add_argument("--seed", type=seed, default=0, help="master seed in [0, 2^63) (default 0)")
    experiment.add_argument("--q", type=schedule, default=None,
                            help="EAN schedule for ean_hop / ean_degree (default harmonic:0.5)")
    experiment.add_argument("--workers", type=positive_int, default=1, help="worker processes (default 1)")
    experiment.add_argument("--pairs", type=positive_int, default=None,
                            help="dist_oracle: sampled pairs per replicate (default: all pairs)")
    experiment.add_argument("--pairs-per-graph", type=positive_int, default=1,
                            help="hop kinds: pairs drawn per graph; > 1 is fast mode with dependent samples")
    experiment.add_argument("--distance", choices=["blocks", "prefix"], default="blocks",
                            help="hop statistic: block-count formula or exact prefix-closure BFS")
    experiment.add_argument("--no-exact-check", dest="exact_check", action="store_false",
                            help="dist_oracle: skip the exact prefix-closure distance")
    experiment.add_argument("--out", type=Path, default=None,
                            help="directory for results.csv and summary.json (default: summary to stdout)")
    experiment.add_argument("--ledger", default=None, metavar="PATH",
                            help="record the run in this SQLite ledger (path or SQLAlchemy URL)")
    experiment.set_defaults(handler=experiment_command)

    runs = subparsers.add_parser("runs", parents=[parent], help="list runs recorded in a ledger")
    runs.add_argument("--ledger", default=None, metavar="PATH", help="ledger path or URL (default ./data ledger)")
    runs.add_argument("--kind", choices=[k.value for k in ExperimentKind], default=None)
    runs.add_argument("--limit", type=non_negative_int, default=None, help="show only the latest runs")
    runs.set_defaults(handler=runs_command)


def experiment_command(args: argparse.Namespace) -> int:
    config = ExperimentConfig(
        kind            = args.kind,
        n               = args.steps,
        d               = args.dim,
        replicates      = args.replicates,
        master_seed     = args.seed,
        schedule        = args.q,
        output          = args.out,
        workers         = args.workers,
        pairs           = args.pairs,
        pairs_per_graph = args.pairs_per_graph,
        distance        = args.distance,
        exact_check     = args.exact_check,
    )
    result = run_experiment(config)
    results_path = None
    if config.output is None:
        print(summary_json(result), end="")
    else:
        results_path, _ = write_outputs(result, config.output)
    if args.ledger is not None:
        record_run(result, args.ledger, results_path)
    if not result.passed:
        logger.error(f"{config.kind.value} failed: {result.failures[0]}")
        return 1
    return 0


def runs_command(args: argparse.Namespace) -> int:
    kind = ExperimentKind(args.kind) if args.kind else None
    runs = list_runs(args.ledger, kind)
    if args.limit is not None:
        runs = runs[-args.limit:] if args.limit else []
    emit_json({"runs": runs})
    return 0
