"""Reports produced by explanation queries."""

from __future__ import annotations

from decimal import Decimal
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from .consultation import GroupTrace
from .degree import Degree
from .fuzzy import FuzzySubset, PossibilityDistribution
from .system import Bound, Column, SensitivityCurve, Side, ThresholdConstraint


class ContributorKind(str, Enum):
    FACT = "fact"
    RULE = "rule"
    STATED = "stated-fact"


class BlameEntry(BaseModel):
    """One term of a min-max row that attains the row value."""

    model_config = ConfigDict(frozen=True)

    kind: ContributorKind
    value: Degree
    rule_id: str | None = Field(default=None, description="unset for a stated fact")
    side: Side | None = None
    parameter: str | None = Field(default=None, description="'s' or 'r' for rule-side entries")

    @property
    def column(self) -> Column:
        return Column(rule_id=self.rule_id, side=self.side)

    @property
    def label(self) -> str:
        if self.kind is ContributorKind.STATED:
            return "stated"
        if self.kind is ContributorKind.RULE:
            return f"{self.parameter}_{self.rule_id}"
        return self.column.label


class BlameSet(BaseModel):
    """Every attainer of the value of one atom row.

    ``vacuous`` marks a row at 1 where no constraint binds at all.
    """

    model_config = ConfigDict(frozen=True)

    attribute: str
    element: str | None = None
    atom: tuple[str, ...]
    achieved: Degree
    contributors: tuple[BlameEntry, ...] = ()
    vacuous: bool = False

    @property
    def facts(self) -> tuple[BlameEntry, ...]:
        return tuple(c for c in self.contributors if c.kind is ContributorKind.FACT)

    @property
    def rules(self) -> tuple[BlameEntry, ...]:
        return tuple(c for c in self.contributors if c.kind is ContributorKind.RULE)


class FactNode(BaseModel):
    """A fact read by a rule group; derived facts carry the trace they came from."""

    model_config = ConfigDict(frozen=True)

    attribute: str
    distribution: PossibilityDistribution
    stated: bool = True
    upstream: HowTree | None = None


class HowTree(BaseModel):
    """Derivation of one attribute: facts, per-rule steps, atom table and output."""

    model_config = ConfigDict(frozen=True)

    attribute: str
    layer: int | None = None
    facts: tuple[FactNode, ...] = ()
    group: GroupTrace | None = None
    distribution: PossibilityDistribution
    pruned: tuple[str, ...] = Field(
        default=(), description="rule ids whose (alpha, beta) stay above the display threshold"
    )


FactNode.model_rebuild()


class RenderedConstraint(BaseModel):
    model_config = ConfigDict(frozen=True)

    rule_id: str
    side: Side
    bound: Bound
    threshold: Degree
    symbolic: str
    text: str


class Verdict(str, Enum):
    SATISFIED = "satisfied"
    CONSTRAINED = "constrained"
    INFEASIBLE = "infeasible"


class ThresholdExplanation(BaseModel):
    """What the inputs must look like for an element to reach (or stay under) a degree."""

    model_config = ConfigDict(frozen=True)

    attribute: str
    element: str
    atom: tuple[str, ...]
    bound: Bound
    target: Degree
    achieved: Degree
    verdict: Verdict
    constraint: ThresholdConstraint
    clauses: tuple[tuple[RenderedConstraint, ...], ...] = ()
    floor: Degree | None = None
    cap: Degree | None = Field(
        default=None, description="degree allowed by a fact stated on the derived attribute"
    )
    currently_met: bool


class Cause(str, Enum):
    INPUT_UNCERTAINTY = "input-uncertainty"
    CONFLICT = "conflict"


class Conflict(BaseModel):
    model_config = ConfigDict(frozen=True)

    subnormality: Degree
    clashing_rules: tuple[tuple[str, str], ...] = ()
    pair_height: Degree | None = None


class Diagnosis(BaseModel):
    """Why a conclusion is uncertain or imprecise."""

    model_config = ConfigDict(frozen=True)

    attribute: str
    distribution: PossibilityDistribution
    causes: tuple[Cause, ...]
    uncertain_inputs: tuple[BlameEntry, ...] = ()
    blames: tuple[BlameSet, ...] = ()
    ignorance: bool = False
    conflict: Conflict | None = None
    cardinality: Decimal
    specificity: Decimal
    note: str = (
        "the conclusion may also be less precise than it could be because rules are only "
        "applied one by one and never combined with each other"
    )


class Competitor(BaseModel):
    model_config = ConfigDict(frozen=True)

    members: tuple[str, ...]
    degree: Degree
    blame: BlameSet | None = None


class CertaintyReport(BaseModel):
    """Certainty of one element, and the other elements that keep it from being higher."""

    model_config = ConfigDict(frozen=True)

    attribute: str
    element: str
    possibility: Degree
    necessity: Degree
    competitors: tuple[Competitor, ...] = ()


class SurpriseReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    attribute: str
    belief: FuzzySubset
    consistency: Degree
    surprise: Degree


class SensitivityReport(BaseModel):
    """How one element's degree responds to one input of one rule."""

    model_config = ConfigDict(frozen=True)

    attribute: str
    element: str
    atom: tuple[str, ...]
    rule_id: str
    side: Side
    curve: SensitivityCurve
    cap: Degree | None = None
