"""Reading base files and Kripke model files."""
from pathlib import Path
from typing import Dict, List, Tuple

from pydantic import ValidationError

from bcm.core.exceptions import ModelSpecError
from bcm.models.kripke import ExplicitModelSet, PointedKripke


class FileProcessor:
    """Line-oriented input files: ``#`` starts a comment, blank lines are skipped."""

    @staticmethod
    def read_text(file_path: str) -> str:
        """
        Read a whole input file.

        Args:
            file_path: Path to the file, or ``-`` for an empty base

        Returns:
            File contents

        Raises:
            ModelSpecError: If the file cannot be read
        """
        if file_path == "-":
            return ""
        try:
            return Path(file_path).read_text(encoding="utf-8")
        except UnicodeDecodeError:
            # Try with different encoding
            return Path(file_path).read_text(encoding="latin-1")
        except OSError as e:
            raise ModelSpecError(f"Error reading {file_path}: {e.strerror or e}")

    @staticmethod
    def content_lines(text: str) -> List[Tuple[int, str]]:
        """Non-empty lines with comments removed, as (line number, text)."""
        lines = []
        for number, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                lines.append((number, line))
        return lines

    @staticmethod
    def read_base_lines(file_path: str) -> List[str]:
        """The formula lines of a base file."""
        return [line for _, line in FileProcessor.content_lines(FileProcessor.read_text(file_path))]

    @staticmethod
    def parse_kripke(text: str) -> ExplicitModelSet:
        """
        Parse a Kripke model file.

        Directives: ``model <name>`` starts a new model, then ``state <s>``,
        ``init <s>``, ``edge <from> <to>`` and ``label <s> <atom>[,<atom>...]``.
        A file without ``model`` lines holds one model.

        Raises:
            ModelSpecError: On an unknown directive, a missing argument or an
                invalid structure (including a non-total transition relation)
        """
        blocks: List[Tuple[int, str, List[Tuple[int, str]]]] = []
        for number, line in FileProcessor.content_lines(text):
            keyword, _, rest = line.partition(" ")
            if keyword == "model":
                blocks.append((number, rest.strip(), []))
            else:
                if not blocks:
                    blocks.append((number, "", []))
                blocks[-1][2].append((number, line))
        return ExplicitModelSet.of(FileProcessor._build_model(*block) for block in blocks)

    @staticmethod
    def _build_model(start: int, name: str, lines: List[Tuple[int, str]]) -> PointedKripke:
        states: List[str] = []
        edges: List[Tuple[str, str]] = []
        labels: Dict[str, List[str]] = {}
        initial = None
        for number, line in lines:
            keyword, *args = line.split()
            if keyword == "state" and len(args) == 1:
                if args[0] not in states:
                    states.append(args[0])
            elif keyword == "init" and len(args) == 1:
                initial = args[0]
            elif keyword == "edge" and len(args) == 2:
                edges.append((args[0], args[1]))
            elif keyword == "label" and len(args) in (1, 2):
                atoms = [a.strip() for a in args[1].split(",") if a.strip()] if len(args) == 2 else []
                labels.setdefault(args[0], []).extend(atoms)
            else:
                raise ModelSpecError(f"line {number}: cannot read {line!r}")
        if initial is None:
            if not states:
                raise ModelSpecError(f"line {start}: model {name or '(unnamed)'} has no states")
            initial = states[0]
        try:
            return PointedKripke.build(states, edges, labels, initial, name=name)
        except ValidationError as e:
            reason = e.errors()[0]["msg"]
            raise ModelSpecError(f"model {name or '(unnamed)'} starting at line {start}: {reason}")
