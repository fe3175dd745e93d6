"""
`generate` and `export` subcommands.
"""
import argparse
from pathlib import Path

from apollonian.cli.common import add_growth_arguments, emit_json, grow_from_args
from apollonian.generator.export import GRAPH_WRITERS, convert_export, export
from apollonian.generator.network import check_invariants


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    generate = subparsers.add_parser(
        "generate", parents=[parent],
        help="grow a RAN or EAN and write vertices.csv and edges.csv",
    )
    add_growth_arguments(generate)
    generate.add_argument("--out", type=Path, required=True, help="output directory")
    generate.add_argument("--check", action="store_true",
                          help="verify the structural invariants of the grown graph before writing")
    generate.set_defaults(handler=generate_command)

    convert = subparsers.add_parser(
        "export", parents=[parent],
        help="convert a generated vertex/edge export into a single graph file",
    )
    convert.add_argument("--graph", type=Path, required=True, help="directory written by `generate`")
    convert.add_argument("--format", choices=sorted(GRAPH_WRITERS), default="graphml",
                         help="graph file format (default graphml)")
    convert.add_argument("--out", type=Path, required=True, help="graph file to write")
    convert.set_defaults(handler=export_command)


def generate_command(args: argparse.Namespace) -> int:
    state = grow_from_args(args)
    if args.check:
        check_invariants(state)
    paths = export(state, args.out)
    emit_json(
        {
            "model":          state.model.value,
            "d":              state.d,
            "steps":          state.step,
            "seed":           args.seed,
            "vertices":       state.n_vertices,
            "edges":          state.edge_count,
            "active_cliques": state.n_active,
            "added_nodes":    state.added_nodes,
            "vertices_file":  str(paths.vertices),
            "edges_file":     str(paths.edges),
        }
    )
    return 0


def export_command(args: argparse.Namespace) -> int:
    graph = convert_export(args.graph, args.out, args.format)
    emit_json(
        {
            "format": args.format,
            "nodes":  graph.number_of_nodes(),
            "edges":  graph.number_of_edges(),
            "file":   str(args.out),
        }
    )
    return 0
