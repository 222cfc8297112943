"""Command-line entry point: ``bcm <logic> <command> [options]``."""
import argparse
import logging
import sys
from typing import List, Optional, TextIO

from bcm.commands import audit, catalog, change, compat, lattice, postulates
from bcm.commands.common import format_witness
from bcm.core.config import settings
from bcm.core.exceptions import BeliefChangeError, FormulaSyntaxError, IncompatibleError
from bcm.logics import LOGIC_IDS

logger = logging.getLogger(__name__)

USAGE_EXIT_CODE = FormulaSyntaxError.exit_code


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the parse-error code instead of argparse's 2 (reserved for incompatibility)."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT_CODE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog=settings.APP_NAME,
        description="Model-oriented belief change: eviction and reception over finite bases",
    )
    parser.add_argument("--version", action="version", version=f"{settings.APP_NAME} {settings.APP_VERSION}")
    parser.add_argument("logic", choices=LOGIC_IDS)
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    # Register commands
    change.register(subparsers)
    compat.register(subparsers)
    postulates.register(subparsers)
    lattice.register(subparsers)
    catalog.register(subparsers)
    audit.register(subparsers)
    return parser


def configure_logging() -> None:
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(
            level=settings.LOG_LEVEL,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    configure_logging()
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args, out)
    except IncompatibleError as e:
        print(f"incompatible: {e.explanation}", file=sys.stderr)
        if e.witness is not None:
            print(f"witness: {format_witness(e.witness)}", file=sys.stderr)
        return e.exit_code
    except BeliefChangeError as e:
        logger.debug("command failed", exc_info=True)
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code


def run() -> None:
    sys.exit(main())
