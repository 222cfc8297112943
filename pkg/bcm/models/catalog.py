"""Catalog: the finite family of finitely representable model sets."""
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from bcm.models.model_set import ModelSet

Base = Tuple[Any, ...]


class Catalog(BaseModel):
    """Every representable ModelSet of a finite system, each with one witness base.

    The owning system checks ``models_of(witness) == set`` before
    constructing the catalog. ``conjunctive`` records whether bases are read
    as the joint satisfaction of their formulas, in which case the family is
    closed under intersection.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: Dict[ModelSet, Base]
    universe_size: int
    conjunctive: bool = True

    @model_validator(mode="after")
    def _check(self) -> "Catalog":
        if not self.entries:
            raise ValueError("catalog must not be empty")
        for model_set in self.entries:
            if model_set.universe_size != self.universe_size:
                raise ValueError(f"{model_set!r} is not over a universe of size {self.universe_size}")
        # the full power set is trivially closed
        if self.conjunctive and len(self.entries) < (1 << self.universe_size):
            sets = list(self.entries)
            for i, left in enumerate(sets):
                for right in sets[i + 1:]:
                    if (left & right) not in self.entries:
                        raise ValueError(f"catalog not closed under intersection: {left!r} & {right!r}")
        return self

    def __contains__(self, model_set: ModelSet) -> bool:
        return model_set in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def sets(self) -> Tuple[ModelSet, ...]:
        """Catalog sets in canonical order."""
        return tuple(sorted(self.entries, key=ModelSet.sort_key))

    def witness(self, model_set: ModelSet) -> Optional[Base]:
        return self.entries.get(model_set)

    def has_empty(self) -> bool:
        return ModelSet.empty(self.universe_size) in self.entries

    def has_universe(self) -> bool:
        return ModelSet.full(self.universe_size) in self.entries
