"""
`constants` subcommand: the limiting constants for one dimension as JSON.
"""
import argparse
from pathlib import Path

from apollonian.cli.common import dimension, emit_json
from apollonian.theory.diameter import solve_diameter


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    constants = subparsers.add_parser(
        "constants", parents=[parent],
        help="print mu, sigma2, c_tilde, the diameter optimum and the hopcount coefficients",
    )
    constants.add_argument("--dim", type=dimension, default=2, help="simplex dimension d >= 2 (default 2)")
    constants.add_argument("--out", type=Path, default=None, help="JSON file to write (default stdout)")
    constants.set_defaults(handler=constants_command)


def constants_command(args: argparse.Namespace) -> int:
    emit_json(solve_diameter(args.dim).constants_json(), args.out)
    return 0
