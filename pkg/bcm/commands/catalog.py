"""``catalog`` and ``neighbors``: inspect the representable model sets."""
import argparse
from typing import TextIO

from bcm.commands.common import add_common_options, emit, load_system, require_finite, run_config
from bcm.services.poset import immediate_neighbors
from bcm.utils.model_spec import parse_model_spec


def register(subparsers) -> None:
    parser = subparsers.add_parser("catalog", help="list representable model sets with a witness base")
    add_common_options(parser)
    parser.set_defaults(handler=handle_catalog)

    parser = subparsers.add_parser("neighbors", help="immediate catalog neighbours of a model set")
    add_common_options(parser)
    parser.add_argument("target", help="model-set spec")
    parser.set_defaults(handler=handle_neighbors)


def handle_catalog(args: argparse.Namespace, out: TextIO) -> int:
    config = run_config(args)
    system = require_finite(load_system(config), "catalog")
    catalog = system.catalog
    for model_set in catalog.sets():
        formulas = system.format_base(catalog.witness(model_set))
        text = "; ".join(formulas) if formulas else "(empty base)"
        emit(out, config, [f"{system.format_set(model_set)}  <-  {text}"], {
            "models": system.format_set(model_set),
            "witness": formulas,
        })
    emit(out, config, [f"{len(catalog)} of {1 << system.universe_size} sets representable"], {
        "representable": len(catalog),
        "total": 1 << system.universe_size,
    })
    return 0


def handle_neighbors(args: argparse.Namespace, out: TextIO) -> int:
    config = run_config(args)
    system = require_finite(load_system(config), "neighbors")
    target = parse_model_spec(args.target, system)
    report = immediate_neighbors(system.catalog, target)
    predecessors = [system.format_set(s) for s in report.predecessors]
    successors = [system.format_set(s) for s in report.successors]
    lines = [
        f"target: {system.format_set(target)} ({'representable' if target in system.catalog else 'not representable'})",
        "predecessors: " + (" ".join(predecessors) or "none"),
        "successors: " + (" ".join(successors) or "none"),
    ]
    emit(out, config, lines, {
        "target": system.format_set(target),
        "representable": target in system.catalog,
        "predecessors": predecessors,
        "successors": successors,
    })
    return 0
