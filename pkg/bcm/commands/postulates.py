"""``postulates``: exhaustive postulate check of the maxichoice operators."""
import argparse
from typing import TextIO

from bcm.commands.common import add_common_options, emit, load_policy, load_system, require_finite, run_config
from bcm.services.engine import maxichoice_evictor, maxichoice_receiver
from bcm.services.postulates import check_eviction_postulates, check_reception_postulates


def register(subparsers) -> None:
    parser = subparsers.add_parser("postulates", help="check the eviction and reception postulates")
    add_common_options(parser)
    parser.add_argument("--kind", choices=("eviction", "reception", "both"), default="both")
    parser.set_defaults(handler=handle_postulates)


def handle_postulates(args: argparse.Namespace, out: TextIO) -> int:
    config = run_config(args)
    system = require_finite(load_system(config), "postulates")
    policy = load_policy(config, system)
    reports = []
    if args.kind in ("eviction", "both"):
        reports.append(check_eviction_postulates(system, maxichoice_evictor(system, policy)))
    if args.kind in ("reception", "both"):
        reports.append(check_reception_postulates(system, maxichoice_receiver(system, policy)))

    passed = 0
    total = 0
    for report in reports:
        lines = [f"{report.kind}: {report.cases} cases, {report.skipped} incompatible"]
        for status in report.statuses:
            total += 1
            passed += status.passed
            verdict = "pass" if status.passed else f"FAIL ({len(status.failures)} cases)"
            lines.append(f"  {status.name}: {verdict}")
            for case in status.failures[:3]:
                lines.append(
                    f"    base {system.format_base(case.base)} models {system.format_set(case.models)}"
                    f" -> {system.format_set(case.result_models)}"
                )
        emit(out, config, lines, {
            "kind": report.kind,
            "cases": report.cases,
            "skipped": report.skipped,
            "failed": report.failed_names(),
        })
    emit(out, config, [f"{passed}/{total} postulates pass"], {"passed": passed, "total": total})
    return 0
