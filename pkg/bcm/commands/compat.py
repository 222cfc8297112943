"""``compat``: eviction/reception compatibility verdict of a logic."""
import argparse
from typing import TextIO

from bcm.commands.common import add_common_options, emit, load_system, run_config, yes_no
from bcm.services.diagnostics import brute_force_compat, compat


def register(subparsers) -> None:
    parser = subparsers.add_parser("compat", help="eviction/reception compatibility verdict")
    add_common_options(parser)
    parser.add_argument("--cross-check", action="store_true", help="also run the exhaustive oracle (finite logics)")
    parser.set_defaults(handler=handle_compat, default_atoms=("a",))


def handle_compat(args: argparse.Namespace, out: TextIO) -> int:
    config = run_config(args)
    system = load_system(config)
    verdict = compat(system)
    line = (
        f"eviction: {yes_no(verdict.eviction_compatible)} ({verdict.eviction_reason}), "
        f"reception: {yes_no(verdict.reception_compatible)} ({verdict.reception_reason})"
    )
    record = {
        "logic": system.name,
        "eviction": verdict.eviction_compatible,
        "reception": verdict.reception_compatible,
        "eviction_reason": verdict.eviction_reason,
        "reception_reason": verdict.reception_reason,
    }
    lines = [line]
    if args.cross_check and system.finite:
        oracle = brute_force_compat(system.catalog)
        agrees = (oracle.eviction_compatible, oracle.reception_compatible) == (
            verdict.eviction_compatible,
            verdict.reception_compatible,
        )
        lines.append(f"oracle: {'agrees' if agrees else 'disagrees'}")
        record["oracle_agrees"] = agrees
    emit(out, config, lines, record)
    return 0
