"""``evict`` and ``receive``: apply a maxichoice operator to a base file."""
import argparse
from typing import TextIO

from bcm.commands.common import (
    add_common_options,
    emit,
    load_policy,
    load_system,
    read_base,
    read_models,
    run_config,
)
from bcm.models.reports import ChangeReport
from bcm.services import engine


def register(subparsers) -> None:
    for name, help_text in (("evict", "remove a set of models"), ("receive", "admit a set of models")):
        parser = subparsers.add_parser(name, help=help_text)
        add_common_options(parser)
        parser.add_argument("--base", required=True, help="base file, one formula per line ('-' for the empty base)")
        parser.add_argument("--models", required=True, help="model-set spec, interval expression or Kripke file")
        parser.set_defaults(handler=handle_change, operation=name)


def handle_change(args: argparse.Namespace, out: TextIO) -> int:
    config = run_config(args)
    system = load_system(config)
    base = read_base(system, args.base)
    models = read_models(system, args.models)
    operation = engine.evict if args.operation == "evict" else engine.receive
    report: ChangeReport = operation(system, base, models, load_policy(config, system), config.on_incompatible)

    formulas = system.format_base(report.result_base)
    lines = [f"models: {report.models_text}"]
    if system.finite:
        lines.append(f"candidates: {len(report.candidates)}")
    if report.kept:
        lines.append("kept: yes")
    lines.append("base:" if formulas else "base: (empty)")
    lines.extend(f"  {formula}" for formula in formulas)
    emit(out, config, lines, {
        "operation": report.operation,
        "base": formulas,
        "models": report.models_text,
        "candidates": len(report.candidates),
        "kept": report.kept,
    })
    return 0
