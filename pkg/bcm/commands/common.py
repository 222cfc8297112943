"""Shared plumbing for command handlers: run configuration, input loading, output."""
import argparse
import json
from typing import Any, Dict, Iterable, TextIO

from pydantic import ValidationError

from bcm.core.exceptions import PreconditionError
from bcm.logics import FiniteSatSystem, SatSystem, build_system
from bcm.logics.ltlx import LtlxSystem
from bcm.logics.qintervals import QIntervalSystem
from bcm.models.catalog import Base
from bcm.models.kripke import IntensionalModels, PointedKripke
from bcm.models.run_config import RunConfig
from bcm.models.selection import SelectionPolicy
from bcm.utils.file_processor import FileProcessor
from bcm.utils.formula_parser import parse_atom_list
from bcm.utils.model_spec import parse_model_spec


def add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--atoms", default="", help="comma-separated signature, e.g. p,q")
    parser.add_argument("--theta", type=float, default=None, help="goedel satisfaction threshold in (0,1]")
    parser.add_argument("--selection", choices=("lex-min", "lex-max", "ranking"), default=None)
    parser.add_argument(
        "--ranking", default="", help="semicolon-separated model sets, most preferred first (finite logics)"
    )
    parser.add_argument("--on-incompatible", choices=("error", "keep"), default="error")
    parser.add_argument("--json", action="store_true", help="JSON lines instead of text")


def run_config(args: argparse.Namespace) -> RunConfig:
    atoms = tuple(parse_atom_list(args.atoms))
    # commands whose verdict does not depend on the signature set default_atoms
    if not atoms and args.logic != "qint":
        atoms = getattr(args, "default_atoms", ())
    fields: Dict[str, Any] = {
        "logic": args.logic,
        "atoms": atoms,
        "theta": args.theta,
        "ranking": tuple(part.strip() for part in args.ranking.split(";") if part.strip()),
        "on_incompatible": args.on_incompatible,
        "output": "json-lines" if args.json else "text",
    }
    if args.selection is not None:
        fields["selection"] = args.selection
    try:
        return RunConfig(**fields)
    except ValidationError as e:
        raise PreconditionError(e.errors()[0]["msg"].removeprefix("Value error, "))


def load_system(config: RunConfig) -> SatSystem:
    return build_system(config.logic, config.atoms, config.theta)


def require_finite(system: SatSystem, command: str) -> FiniteSatSystem:
    if not isinstance(system, FiniteSatSystem):
        raise PreconditionError(f"{command} needs a finite logic; {system.name} is symbolic")
    return system


def load_policy(config: RunConfig, system: SatSystem) -> SelectionPolicy:
    if config.selection != "ranking":
        return SelectionPolicy(mode=config.selection)
    finite = require_finite(system, "ranking selection")
    ranking = tuple(parse_model_spec(spec, finite) for spec in config.ranking)
    return SelectionPolicy(mode="ranking", ranking=ranking)


def read_base(system: SatSystem, file_path: str) -> Base:
    return system.parse_base(FileProcessor.read_base_lines(file_path))


def read_models(system: SatSystem, spec: str):
    """Model-set argument: a set spec, an interval expression or a Kripke file, per logic."""
    if isinstance(system, QIntervalSystem):
        return system.parse_models(spec)
    if isinstance(system, LtlxSystem):
        if spec.startswith("mod-of:"):
            formulas = [part for part in spec[len("mod-of:"):].split(";") if part.strip()]
            return IntensionalModels(base=system.parse_base(formulas))
        return FileProcessor.parse_kripke(FileProcessor.read_text(spec))
    return parse_model_spec(spec, system)


def format_witness(witness: Any) -> str:
    if isinstance(witness, PointedKripke):
        edges = ", ".join(f"{s}->{t}" for s, t in sorted(witness.transitions))
        labels = "; ".join(f"{s}: {','.join(sorted(atoms)) or '-'}" for s, atoms in witness.labels)
        return f"model {witness.name or witness.initial} init {witness.initial}; edges {edges}; labels {labels}"
    if isinstance(witness, tuple) and len(witness) == 2:
        return f"{witness[0]} -> {witness[1]}"
    return str(witness)


def emit(out: TextIO, config: RunConfig, lines: Iterable[str], record: Dict[str, Any]) -> None:
    """Write text lines, or one JSON object per call in json-lines mode."""
    if config.output == "json-lines":
        out.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")
        return
    for line in lines:
        out.write(line + "\n")


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"

