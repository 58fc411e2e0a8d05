"""Condition matching models."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .degree import ONE, Degree
from .fuzzy import FuzzySubset


class MatchPair(BaseModel):
    """Possibility that a condition holds (``pos``) and that it fails (``neg``)."""

    model_config = ConfigDict(frozen=True)

    pos: Degree
    neg: Degree
    subnormal_fact: bool = Field(
        default=False, description="set when a fact used for the match was not normalized"
    )

    @property
    def is_normalized(self) -> bool:
        return max(self.pos, self.neg) == ONE


class Connective(str, Enum):
    CONJUNCTION = "and"
    DISJUNCTION = "or"


class ConditionPart(BaseModel):
    """One elementary condition ``attribute IS [NOT] term`` with its importance."""

    model_config = ConfigDict(frozen=True)

    attribute: str
    term: str
    negated: bool = False
    weight: Degree = ONE
    pattern: FuzzySubset


class WeightedCondition(BaseModel):
    """Compound condition; weights must reach 1 for at least one part."""

    model_config = ConfigDict(frozen=True)

    parts: tuple[ConditionPart, ...] = Field(..., min_length=1)
    connective: Connective = Connective.CONJUNCTION

    @model_validator(mode="after")
    def _normalized_weights(self) -> WeightedCondition:
        if max(part.weight for part in self.parts) != ONE:
            raise ValueError("importance weights must satisfy max w_i = 1")
        return self

    @property
    def weights(self) -> tuple[Degree, ...]:
        return tuple(part.weight for part in self.parts)

    @property
    def attributes(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(part.attribute for part in self.parts))
