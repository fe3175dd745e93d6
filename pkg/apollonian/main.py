"""
Command-line entry point.
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from apollonian import __version__
from apollonian.cli import constants, experiment, graphs, measure
from apollonian.cli.common import common_parent
from apollonian.errors import (
    DomainError,
    ExportError,
    InvalidArgument,
    InvariantViolation,
    SizeGuardExceeded,
    SolverError,
)

# Subcommand modules, one per area.
COMMANDS = (graphs, measure, constants, experiment)

# Exit codes: configuration and argument errors are 2, failed checks and I/O are 1.
CONFIG_ERRORS = (InvalidArgument, DomainError, SizeGuardExceeded, ValidationError)
RUN_ERRORS = (ExportError, InvariantViolation, SolverError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apollonian",
        description="Random and evolving Apollonian networks: growth, measurement, constants and experiments",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    parent = common_parent()
    for module in COMMANDS:
        module.register(subparsers, parent)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 after --help / --version.
        return exc.code if isinstance(exc.code, int) else 0
    logging.basicConfig(
        level=args.log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
    try:
        return args.handler(args)
    except CONFIG_ERRORS as exc:
        print(f"apollonian {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except RUN_ERRORS as exc:
        print(f"apollonian {args.command}: error: {exc}", file=sys.stderr)
        return 1
