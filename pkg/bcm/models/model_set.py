"""ModelSet: an extensional set of model indices over a finite universe."""
from typing import FrozenSet, Iterable, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from bcm.core.exceptions import UniverseMismatchError


class ModelSet(BaseModel):
    """Set of indices into a satisfaction system's universe enumeration.

    Ordering: ``sort_key`` is the membership vector, compared
    lexicographically. It is the canonical total order used everywhere a
    deterministic order is needed (selection, reports, DOT output).
    """

    model_config = ConfigDict(frozen=True)

    members: FrozenSet[int]
    universe_size: int

    @model_validator(mode="after")
    def _check_indices(self) -> "ModelSet":
        if self.universe_size < 0:
            raise ValueError("universe_size must be non-negative")
        bad = [i for i in self.members if i < 0 or i >= self.universe_size]
        if bad:
            raise ValueError(f"indices {sorted(bad)} outside universe of size {self.universe_size}")
        return self

    @classmethod
    def of(cls, indices: Iterable[int], universe_size: int) -> "ModelSet":
        return cls(members=frozenset(indices), universe_size=universe_size)

    @classmethod
    def empty(cls, universe_size: int) -> "ModelSet":
        return cls(members=frozenset(), universe_size=universe_size)

    @classmethod
    def full(cls, universe_size: int) -> "ModelSet":
        return cls(members=frozenset(range(universe_size)), universe_size=universe_size)

    @classmethod
    def all_subsets(cls, universe_size: int) -> Tuple["ModelSet", ...]:
        """Every subset of the universe, in canonical order."""
        subsets = (
            cls(members=frozenset(i for i in range(universe_size) if mask >> i & 1), universe_size=universe_size)
            for mask in range(1 << universe_size)
        )
        return tuple(sorted(subsets, key=ModelSet.sort_key))

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(1 if i in self.members else 0 for i in range(self.universe_size))

    def _same_universe(self, other: "ModelSet") -> None:
        if self.universe_size != other.universe_size:
            raise UniverseMismatchError(
                f"universe sizes differ: {self.universe_size} != {other.universe_size}"
            )

    def __and__(self, other: "ModelSet") -> "ModelSet":
        self._same_universe(other)
        return ModelSet(members=self.members & other.members, universe_size=self.universe_size)

    def __or__(self, other: "ModelSet") -> "ModelSet":
        self._same_universe(other)
        return ModelSet(members=self.members | other.members, universe_size=self.universe_size)

    def __sub__(self, other: "ModelSet") -> "ModelSet":
        self._same_universe(other)
        return ModelSet(members=self.members - other.members, universe_size=self.universe_size)

    def complement(self) -> "ModelSet":
        return ModelSet(
            members=frozenset(range(self.universe_size)) - self.members,
            universe_size=self.universe_size,
        )

    def __le__(self, other: "ModelSet") -> bool:
        self._same_universe(other)
        return self.members <= other.members

    def __lt__(self, other: "ModelSet") -> bool:
        self._same_universe(other)
        return self.members < other.members

    def __ge__(self, other: "ModelSet") -> bool:
        return other <= self

    def __gt__(self, other: "ModelSet") -> bool:
        return other < self

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __len__(self) -> int:
        return len(self.members)

    def indices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.members))

    def is_empty(self) -> bool:
        return not self.members

    def is_full(self) -> bool:
        return len(self.members) == self.universe_size

    def __repr__(self) -> str:
        return f"ModelSet({sorted(self.members)}/{self.universe_size})"
