"""Selection functions over families of candidate model sets."""
from typing import Iterable, Literal, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from bcm.models.model_set import ModelSet

SelectionMode = Literal["lex-min", "lex-max", "ranking"]


class SelectionPolicy(BaseModel):
    """Deterministic choice function: ``select(X)`` is an element of ``X``.

    The choice depends on the candidate family only, so any operator built
    on top of it satisfies uniformity.

    ``ranking`` lists preferred model sets first. Candidates absent from the
    ranking come after every ranked one, ordered lex-min.
    """

    model_config = ConfigDict(frozen=True)

    mode: SelectionMode = "lex-min"
    ranking: Tuple[ModelSet, ...] = ()

    @model_validator(mode="after")
    def _check_ranking(self) -> "SelectionPolicy":
        if self.mode == "ranking" and not self.ranking:
            raise ValueError("ranking mode requires a non-empty ranking")
        return self

    def select(self, family: Iterable[ModelSet]) -> ModelSet:
        candidates = sorted(set(family), key=ModelSet.sort_key)
        if not candidates:
            raise ValueError("selection over an empty family")
        if self.mode == "lex-max":
            return candidates[-1]
        if self.mode == "ranking":
            positions = {model_set: pos for pos, model_set in enumerate(self.ranking)}
            return min(candidates, key=lambda s: (positions.get(s, len(positions)), s.sort_key()))
        return candidates[0]
