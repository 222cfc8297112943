"""Validated settings of one command-line run."""
from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from bcm.core.config import settings
from bcm.models.selection import SelectionMode

LogicId = Literal["prop", "prop-t", "prop-p", "prop-t1", "prop-p1", "horn", "k3", "p3", "goedel", "ltlx", "qint"]


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    logic: LogicId
    atoms: Tuple[str, ...] = ()
    theta: Optional[float] = None
    selection: SelectionMode = Field(default_factory=lambda: settings.DEFAULT_SELECTION)
    ranking: Tuple[str, ...] = ()
    on_incompatible: Literal["error", "keep"] = "error"
    output: Literal["text", "json-lines", "dot"] = "text"

    @model_validator(mode="after")
    def _check(self) -> "RunConfig":
        if self.theta is not None:
            if self.logic != "goedel":
                raise ValueError("--theta only applies to goedel")
            if not 0 < self.theta <= 1:
                raise ValueError("--theta must lie in (0,1]")
        if self.logic != "qint" and not self.atoms:
            raise ValueError(f"{self.logic} needs --atoms")
        if self.logic == "qint" and self.atoms:
            raise ValueError("qint takes no atoms")
        if self.selection == "ranking" and not self.ranking:
            raise ValueError("--selection ranking needs --ranking")
        if self.ranking and self.selection != "ranking":
            raise ValueError("--ranking only applies to --selection ranking")
        return self
