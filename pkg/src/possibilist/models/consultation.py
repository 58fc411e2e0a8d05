"""The recorded trace of a consultation, layer by layer."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from ..errors import NotDerivedError, UnknownAttributeError
from .degree import Degree
from .fuzzy import Domain, PossibilityDistribution
from .matching import MatchPair
from .rules import UncertainRule
from .system import InputVector, OutputVector, RuleMatrix


class ElementaryMatch(BaseModel):
    """Pattern matching of one condition part against the fact it reads."""

    model_config = ConfigDict(frozen=True)

    attribute: str
    term: str
    negated: bool
    weight: Degree
    fact: PossibilityDistribution
    pair: MatchPair


class RuleStep(BaseModel):
    """Matching, propagation and induced distribution for one (crisp) rule."""

    model_config = ConfigDict(frozen=True)

    rule: UncertainRule
    elementary: tuple[ElementaryMatch, ...]
    match: MatchPair
    alpha: Degree
    beta: Degree
    induced: PossibilityDistribution


class GroupTrace(BaseModel):
    """Everything computed for the rules concluding on one attribute."""

    model_config = ConfigDict(frozen=True)

    attribute: str
    domain: Domain
    steps: tuple[RuleStep, ...]
    matrix: RuleMatrix
    output: OutputVector
    derived: PossibilityDistribution
    stated_fact: PossibilityDistribution | None = None
    distribution: PossibilityDistribution

    @property
    def rules(self) -> tuple[UncertainRule, ...]:
        return tuple(step.rule for step in self.steps)

    @property
    def rule_ids(self) -> tuple[str, ...]:
        return tuple(step.rule.id for step in self.steps)

    @property
    def input_vector(self) -> InputVector:
        return InputVector(rule_ids=self.rule_ids, pairs=tuple(step.match for step in self.steps))

    def step(self, rule_id: str) -> RuleStep:
        for step in self.steps:
            if step.rule.id == rule_id:
                return step
        raise KeyError(rule_id)


class LayerTrace(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    groups: tuple[GroupTrace, ...]


class Consultation(BaseModel):
    """Inputs, per-layer traces and resulting distributions of one run."""

    model_config = ConfigDict(frozen=True)

    domains: dict[str, Domain] = Field(default_factory=dict, description="attribute -> domain")
    facts: dict[str, PossibilityDistribution] = Field(default_factory=dict)
    layers: tuple[LayerTrace, ...] = ()
    distributions: dict[str, PossibilityDistribution] = Field(default_factory=dict)

    @property
    def derived_attributes(self) -> tuple[str, ...]:
        return tuple(group.attribute for layer in self.layers for group in layer.groups)

    def domain(self, attribute: str) -> Domain:
        try:
            return self.domains[attribute]
        except KeyError:
            raise UnknownAttributeError(f"unknown attribute {attribute!r}") from None

    def distribution(self, attribute: str) -> PossibilityDistribution:
        """The final distribution, total ignorance for attributes nobody spoke about."""
        domain = self.domain(attribute)
        return self.distributions.get(attribute) or PossibilityDistribution.ignorance(domain)

    def group(self, attribute: str) -> GroupTrace:
        self.domain(attribute)
        for layer in self.layers:
            for group in layer.groups:
                if group.attribute == attribute:
                    return group
        raise NotDerivedError(f"no rule concludes on attribute {attribute!r}")

    def layer_of(self, attribute: str) -> int | None:
        for layer in self.layers:
            if any(group.attribute == attribute for group in layer.groups):
                return layer.index
        return None
