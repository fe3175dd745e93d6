"""
Argument types and helpers shared by the subcommand modules.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from apollonian.errors import ExportError, InvalidArgument
from apollonian.generator.network import GraphState, grow, new_graph
from apollonian.generator.schedule import QSchedule
from apollonian.generator.seeding import replicate_rng
from apollonian.models import GrowthModel

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]
DEFAULT_EAN_SCHEDULE = "harmonic:0.5"


def _bounded_int(text: str, low: int, high: Optional[int] = None) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < low or (high is not None and value > high):
        bound = f">= {low}" if high is None else f"in [{low}, {high}]"
        raise argparse.ArgumentTypeError(f"{value} must be {bound}")
    return value


def non_negative_int(text: str) -> int:
    return _bounded_int(text, 0)


def positive_int(text: str) -> int:
    return _bounded_int(text, 1)


def dimension(text: str) -> int:
    return _bounded_int(text, 2)


def seed(text: str) -> int:
    return _bounded_int(text, 0, 2**63 - 1)


def schedule(text: str) -> QSchedule:
    try:
        return QSchedule.parse(text)
    except (InvalidArgument, ValidationError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def common_parent() -> argparse.ArgumentParser:
    """Flags every subcommand accepts."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--log-level", default="WARNING", choices=LOG_LEVELS, type=str.upper,
        help="logging threshold for messages on stderr (default WARNING)",
    )
    return parent


def add_growth_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", choices=[m.value for m in GrowthModel], default="ran",
                        help="ran: one uniform clique per step; ean: every clique with probability q_n")
    parser.add_argument("--dim", type=dimension, default=2, help="simplex dimension d >= 2 (default 2)")
    parser.add_argument("--steps", type=non_negative_int, required=True, help="number of growth steps n")
    parser.add_argument("--seed", type=seed, default=0, help="master seed in [0, 2^63) (default 0)")
    parser.add_argument("--q", type=schedule, default=None,
                        help=f"EAN occupation schedule const:Q | harmonic:C | power:C,G (default {DEFAULT_EAN_SCHEDULE})")


def growth_schedule(args: argparse.Namespace) -> Optional[QSchedule]:
    if args.model == GrowthModel.ran.value:
        if args.q is not None:
            raise InvalidArgument("--q only applies to --model ean")
        return None
    return args.q if args.q is not None else QSchedule.parse(DEFAULT_EAN_SCHEDULE)


def grow_from_args(args: argparse.Namespace) -> GraphState:
    """Grow the graph the growth flags describe; the stream is replicate 0 of --seed."""
    plan = growth_schedule(args)
    state = new_graph(args.dim, GrowthModel(args.model))
    return grow(state, args.steps, plan, replicate_rng(args.seed, 0))


def emit_json(payload: dict, out: Optional[Path] = None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
    except OSError as exc:
        raise ExportError(out, exc.strerror) from exc
