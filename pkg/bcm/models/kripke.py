"""Pointed Kripke structures for the NeXt fragment of LTL."""
from typing import Dict, FrozenSet, Iterable, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from bcm.models.catalog import Base


class PointedKripke(BaseModel):
    """A finite Kripke structure with a designated initial state.

    The transition relation must be total: every state has a successor.
    ``name`` is only used in reports and does not take part in
    ``structure()``.
    """

    model_config = ConfigDict(frozen=True)

    states: Tuple[str, ...]
    transitions: FrozenSet[Tuple[str, str]]
    labels: Tuple[Tuple[str, FrozenSet[str]], ...] = ()
    initial: str
    name: str = ""

    @model_validator(mode="after")
    def _check(self) -> "PointedKripke":
        known = set(self.states)
        if len(known) != len(self.states):
            raise ValueError("duplicate state")
        if self.initial not in known:
            raise ValueError(f"initial state {self.initial!r} is not declared")
        for source, target in self.transitions:
            for state in (source, target):
                if state not in known:
                    raise ValueError(f"edge uses undeclared state {state!r}")
        for state, _ in self.labels:
            if state not in known:
                raise ValueError(f"label on undeclared state {state!r}")
        stuck = [s for s in self.states if not any(source == s for source, _ in self.transitions)]
        if stuck:
            raise ValueError(f"state {stuck[0]!r} has no successor; transitions must be total")
        return self

    @classmethod
    def build(
        cls,
        states: Iterable[str],
        edges: Iterable[Tuple[str, str]],
        labels: Dict[str, Iterable[str]],
        initial: str,
        name: str = "",
    ) -> "PointedKripke":
        states = tuple(states)
        label_pairs = tuple((s, frozenset(labels.get(s, ()))) for s in states)
        label_pairs += tuple((s, frozenset(atoms)) for s, atoms in labels.items() if s not in states)
        return cls(states=states, transitions=frozenset(edges), labels=label_pairs, initial=initial, name=name)

    def successors(self, state: str) -> Tuple[str, ...]:
        return tuple(sorted(target for source, target in self.transitions if source == state))

    def label_of(self, state: str) -> FrozenSet[str]:
        for labelled, atoms in self.labels:
            if labelled == state:
                return atoms
        return frozenset()

    def reachable(self) -> FrozenSet[str]:
        seen = {self.initial}
        frontier = [self.initial]
        while frontier:
            frontier = [t for s in frontier for t in self.successors(s) if t not in seen]
            seen.update(frontier)
        return frozenset(seen)

    def structure(self) -> Tuple:
        """Identity of the pointed structure, ignoring its display name."""
        labels = tuple(sorted((s, tuple(sorted(a))) for s, a in self.labels if a))
        return self.states, tuple(sorted(self.transitions)), labels, self.initial


class ExplicitModelSet(BaseModel):
    """A finite list of pointed Kripke structures without structural duplicates."""

    model_config = ConfigDict(frozen=True)

    models: Tuple[PointedKripke, ...] = ()

    @classmethod
    def of(cls, models: Iterable[PointedKripke]) -> "ExplicitModelSet":
        unique: Dict[Tuple, PointedKripke] = {}
        for model in models:
            unique.setdefault(model.structure(), model)
        return cls(models=tuple(unique.values()))

    def __len__(self) -> int:
        return len(self.models)


class IntensionalModels(BaseModel):
    """``Mod(base)`` given by its base rather than by listing models."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: Base = Field(default_factory=tuple)
