"""Exception hierarchy shared by the engine, the logics and the CLI."""
from typing import Any, Optional


class BeliefChangeError(Exception):
    """Base class. ``exit_code`` is what the CLI returns for this error."""

    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class IncompatibleError(BeliefChangeError):
    """No candidate exists for the requested change.

    Raised when FRsubs (eviction) or FRsups (reception) of the target is empty.
    For symbolic systems ``witness`` holds the object proving it: the
    universal Kripke model for LTL-X, an improvement step for rational
    intervals.
    """

    exit_code = 2

    def __init__(self, explanation: str, witness: Optional[Any] = None):
        super().__init__(explanation)
        self.explanation = explanation
        self.witness = witness


class FormulaSyntaxError(BeliefChangeError, ValueError):
    """Formula text does not parse. ``column`` is 1-based."""

    exit_code = 3

    def __init__(self, message: str, column: int, text: str = ""):
        super().__init__(f"{message} at column {column}")
        self.column = column
        self.text = text


class ModelSpecError(BeliefChangeError, ValueError):
    """Malformed model-set specification, model file or interval text."""

    exit_code = 3


class BoundExceededError(BeliefChangeError, ValueError):
    """An enumeration bound from the settings was exceeded."""

    exit_code = 4


class UniverseMismatchError(BeliefChangeError, ValueError):
    """Two model sets over different universes were combined."""


class PreconditionError(BeliefChangeError, ValueError):
    """An operation was called outside its precondition."""
