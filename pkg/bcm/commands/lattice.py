"""``lattice``: DOT rendering of the model-set lattice."""
import argparse
from pathlib import Path
from typing import TextIO

from bcm.commands.common import add_common_options, load_system, require_finite, run_config
from bcm.services.poset import lattice_export
from bcm.utils.model_spec import parse_model_spec


def register(subparsers) -> None:
    parser = subparsers.add_parser("lattice", help="Hasse diagram of all model sets as DOT")
    add_common_options(parser)
    parser.add_argument("--highlight", action="append", default=[], help="model-set spec to draw FRsubs arrows from")
    parser.add_argument("--dot", default=None, help="write DOT to this file instead of stdout")
    parser.set_defaults(handler=handle_lattice)


def handle_lattice(args: argparse.Namespace, out: TextIO) -> int:
    config = run_config(args)
    system = require_finite(load_system(config), "lattice")
    highlight = [parse_model_spec(spec, system) for spec in args.highlight]
    dot = lattice_export(system.catalog, highlight, labels=system.labels)
    if args.dot:
        Path(args.dot).write_text(dot, encoding="utf-8")
    else:
        out.write(dot)
    return 0
