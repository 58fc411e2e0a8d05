"""Uncertain rules, knowledge bases, facts and belief models."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .degree import ONE, ZERO, Degree
from .fuzzy import Domain, FuzzySubset, PossibilityDistribution
from .matching import WeightedCondition


class RulePhrasing(BaseModel):
    """Author-written sentences for a rule's condition and its negation."""

    model_config = ConfigDict(frozen=True)

    holds: str
    fails: str


class UncertainRule(BaseModel):
    """``if condition then attribute in E`` with s = pi(q | not p) and r = pi(not q | p)."""

    model_config = ConfigDict(frozen=True)

    id: str
    condition: WeightedCondition
    conclusion_attribute: str
    conclusion_term: str
    conclusion_negated: bool = False
    conclusion: FuzzySubset
    s: Degree = ONE
    r: Degree = ZERO
    phrasing: RulePhrasing | None = None
    sources: tuple[str, ...] = Field(
        default=(), description="ids of the written rules folded into this one"
    )

    @property
    def matrix(self) -> tuple[tuple[Degree, Degree], tuple[Degree, Degree]]:
        """The propagation matrix [[1, s], [r, 1]]; both columns are normalized."""
        return ((ONE, self.s), (self.r, ONE))

    @property
    def is_crisp(self) -> bool:
        return self.conclusion.is_crisp

    @property
    def source_ids(self) -> tuple[str, ...]:
        return self.sources or (self.id,)


class Term(BaseModel):
    """A named fuzzy subset of a declared domain."""

    model_config = ConfigDict(frozen=True)

    name: str
    domain: str
    subset: FuzzySubset

    @property
    def key(self) -> str:
        return f"{self.domain}.{self.name}"


class Attribute(BaseModel):
    """An attribute with its declared domain and its world assumption.

    ``domain`` is the effective domain: for an open-world attribute that is
    concluded by some rule it carries the implicit catch-all element.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    declared_domain: str
    open_world: bool = True
    domain: Domain


class KnowledgeBase(BaseModel):
    """A validated rule base."""

    model_config = ConfigDict(frozen=True)

    domains: dict[str, Domain] = Field(default_factory=dict)
    attributes: dict[str, Attribute] = Field(default_factory=dict)
    terms: dict[str, Term] = Field(default_factory=dict)
    rules: tuple[UncertainRule, ...] = ()

    @property
    def derived_attributes(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(rule.conclusion_attribute for rule in self.rules))

    def rules_for(self, attribute: str) -> tuple[UncertainRule, ...]:
        return tuple(rule for rule in self.rules if rule.conclusion_attribute == attribute)

    def rule(self, rule_id: str) -> UncertainRule:
        for rule in self.rules:
            if rule.id == rule_id or rule_id in rule.sources:
                return rule
        raise KeyError(rule_id)


class FactsFile(BaseModel):
    """Possibility distributions known about attributes of the item under consideration."""

    model_config = ConfigDict(frozen=True)

    facts: dict[str, PossibilityDistribution] = Field(default_factory=dict)

    def distribution_for(self, attribute: str, domain: Domain) -> PossibilityDistribution:
        """The stated fact, or total ignorance when the attribute was omitted."""
        return self.facts.get(attribute) or PossibilityDistribution.ignorance(domain)


class BeliefModel(BaseModel):
    """The user's expected values per attribute."""

    model_config = ConfigDict(frozen=True)

    beliefs: dict[str, FuzzySubset] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _normalized(self) -> BeliefModel:
        for attribute, belief in self.beliefs.items():
            if not belief.is_normalized:
                raise ValueError(f"belief about {attribute!r} is not normalized")
        return self
