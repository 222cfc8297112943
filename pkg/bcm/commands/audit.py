"""``audit`` and ``counterexample``: structural diagnostics of a finite logic."""
import argparse
from typing import TextIO

from bcm.commands.common import (
    add_common_options,
    emit,
    load_policy,
    load_system,
    require_finite,
    run_config,
    yes_no,
)
from bcm.services.diagnostics import (
    intersection_counterexample,
    rmbp_check,
    rmbp_sample,
    union_counterexample,
    uniqueness_audit,
)
from bcm.services.postulates import monotony_probe
from bcm.utils.model_spec import parse_model_spec


def register(subparsers) -> None:
    parser = subparsers.add_parser("audit", help="RMBP, FRsubs/FRsups multiplicity and monotony probe")
    add_common_options(parser)
    parser.set_defaults(handler=handle_audit)

    parser = subparsers.add_parser("counterexample", help="combine the candidates of a target")
    add_common_options(parser)
    parser.add_argument("kind", choices=("intersection", "union"))
    parser.add_argument("target", help="model-set spec")
    parser.set_defaults(handler=handle_counterexample)


def handle_audit(args: argparse.Namespace, out: TextIO) -> int:
    config = run_config(args)
    system = require_finite(load_system(config), "audit")
    rmbp = rmbp_check(system, rmbp_sample(system))
    uniqueness = uniqueness_audit(system.catalog, rmbp_verified=rmbp.passed and system.conjunctive)
    witness = monotony_probe(system, load_policy(config, system))

    lines = [f"rmbp: {'pass' if rmbp.passed else 'fail'} ({rmbp.checked_pairs} pairs)"]
    if rmbp.witness is not None:
        first, second, index = rmbp.witness
        lines.append(
            f"  {system.format_base(first)} and {system.format_base(second)} at {system.label(index)}"
        )
    multiple_subs = [system.format_set(t) for t in uniqueness.multiple_frsubs()]
    multiple_sups = [system.format_set(t) for t in uniqueness.multiple_frsups()]
    lines.append(f"max frsups: {uniqueness.max_frsups()}")
    lines.append("multiple frsubs: " + (" ".join(multiple_subs) or "none"))
    lines.append("multiple frsups: " + (" ".join(multiple_sups) or "none"))
    if witness is None:
        lines.append("reception monotony: holds")
    else:
        lines.append(
            f"reception monotony: fails, {system.format_set(system.models_of(witness.base))}"
            f" <= {system.format_set(system.models_of(witness.larger_base))}"
            f" receiving {system.format_set(witness.models)}"
            f" gives {system.format_set(witness.result)} vs {system.format_set(witness.larger_result)}"
        )
    emit(out, config, lines, {
        "rmbp": rmbp.passed,
        "max_frsups": uniqueness.max_frsups(),
        "multiple_frsubs": multiple_subs,
        "multiple_frsups": multiple_sups,
        "monotony": witness is None,
    })
    return 0


def handle_counterexample(args: argparse.Namespace, out: TextIO) -> int:
    config = run_config(args)
    system = require_finite(load_system(config), "counterexample")
    target = parse_model_spec(args.target, system)
    combine = intersection_counterexample if args.kind == "intersection" else union_counterexample
    evidence = combine(system.catalog, target)
    family = [system.format_set(s) for s in evidence.family]
    lines = [
        "candidates: " + " ".join(family),
        f"{args.kind}: {system.format_set(evidence.combined)}",
        f"representable: {yes_no(evidence.representable)}",
    ]
    emit(out, config, lines, {
        "candidates": family,
        args.kind: system.format_set(evidence.combined),
        "representable": evidence.representable,
    })
    return 0
