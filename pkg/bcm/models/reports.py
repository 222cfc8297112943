"""Report records produced by the engine and the diagnostics."""
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from bcm.models.model_set import ModelSet

Base = Tuple[Any, ...]


class ChangeReport(BaseModel):
    """Outcome of one eviction or reception.

    ``result_models``, ``candidates`` and ``chosen`` are set for finite
    systems. Symbolic systems (LTL-X, rational intervals) leave them unset
    and describe the resulting models in ``models_text``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    operation: Literal["evict", "receive"]
    result_base: Base
    result_models: Optional[ModelSet] = None
    candidates: Tuple[ModelSet, ...] = ()
    chosen: Optional[ModelSet] = None
    models_text: str = ""
    kept: bool = False

    @model_validator(mode="after")
    def _check_choice(self) -> "ChangeReport":
        if self.kept or self.chosen is None:
            return self
        if self.chosen not in self.candidates:
            raise ValueError("chosen set is not among the candidates")
        if self.result_models != self.chosen:
            raise ValueError("result_models must equal the chosen set")
        return self


class EvictionReport(ChangeReport):
    operation: Literal["evict", "receive"] = "evict"


class ReceptionReport(ChangeReport):
    operation: Literal["evict", "receive"] = "receive"


class PostulateCase(BaseModel):
    """A reproducible counterexample: the input pair and the observed sets."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: Base
    models: ModelSet
    base_models: ModelSet
    result_models: ModelSet
    detail: str = ""


class PostulateStatus(BaseModel):
    name: str
    failures: List[PostulateCase] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class PostulateReport(BaseModel):
    """Per-postulate pass/fail over a grid of (base, models) cases."""

    kind: Literal["eviction", "reception"]
    statuses: List[PostulateStatus]
    cases: int = 0
    skipped: int = 0  # cases where the operator reported incompatibility

    def status(self, name: str) -> PostulateStatus:
        for status in self.statuses:
            if status.name == name:
                return status
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        return all(status.passed for status in self.statuses)

    def failed_names(self) -> List[str]:
        return [status.name for status in self.statuses if not status.passed]


class CombinationEvidence(BaseModel):
    """Intersection (or union) of an FRsubs (or FRsups) family and whether it is representable."""

    model_config = ConfigDict(frozen=True)

    family: Tuple[ModelSet, ...]
    combined: ModelSet
    representable: bool


class RmbpVerdict(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    passed: bool
    checked_pairs: int = 0
    witness: Optional[Tuple[Base, Base, int]] = None  # (B1, B2, model index)


class UniquenessReport(BaseModel):
    """``frsubs``/``frsups`` multiplicity of every target over the universe."""

    model_config = ConfigDict(frozen=True)

    frsubs_counts: Dict[ModelSet, int]
    frsups_counts: Dict[ModelSet, int]

    def max_frsups(self) -> int:
        return max(self.frsups_counts.values())

    def multiple_frsubs(self) -> Tuple[ModelSet, ...]:
        """Targets with two or more maximal representable subsets (diagnostic only)."""
        return tuple(sorted((t for t, n in self.frsubs_counts.items() if n >= 2), key=ModelSet.sort_key))

    def multiple_frsups(self) -> Tuple[ModelSet, ...]:
        return tuple(sorted((t for t, n in self.frsups_counts.items() if n >= 2), key=ModelSet.sort_key))


class CompatVerdict(BaseModel):
    """Eviction/reception compatibility with a human-readable justification."""

    model_config = ConfigDict(frozen=True)

    eviction_compatible: bool
    reception_compatible: bool
    eviction_reason: str = ""
    reception_reason: str = ""


class NeighborReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    target: ModelSet
    predecessors: Tuple[ModelSet, ...]
    successors: Tuple[ModelSet, ...]


class MonotonyWitness(BaseModel):
    """Mod(B) ⊆ Mod(B′) while Mod(receive(B, M)) ⊄ Mod(receive(B′, M))."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: Base
    larger_base: Base
    models: ModelSet
    result: ModelSet
    larger_result: ModelSet
