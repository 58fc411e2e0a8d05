"""Data models for the possibilistic inference engine."""

from .consultation import Consultation, ElementaryMatch, GroupTrace, LayerTrace, RuleStep
from .degree import ONE, ZERO, Degree
from .explanation import (
    BlameEntry,
    BlameSet,
    Cause,
    CertaintyReport,
    Competitor,
    Conflict,
    ContributorKind,
    Diagnosis,
    FactNode,
    HowTree,
    RenderedConstraint,
    SensitivityReport,
    SurpriseReport,
    ThresholdExplanation,
    Verdict,
)
from .fuzzy import CATCH_ALL, Domain, FuzzySubset, PossibilityDistribution
from .matching import ConditionPart, Connective, MatchPair, WeightedCondition
from .query import ConsultationRequest, ExplanationRequest, OutputFormat, QueryKind, QueryRequest
from .rules import (
    Attribute,
    BeliefModel,
    FactsFile,
    KnowledgeBase,
    RulePhrasing,
    Term,
    UncertainRule,
)
from .system import (
    Atom,
    AtomicConstraint,
    Bound,
    Column,
    InputVector,
    MinMaxSystem,
    OutputVector,
    RuleMatrix,
    SensitivityCurve,
    Side,
    SolveResult,
    ThresholdConstraint,
)

__all__ = [
    "CATCH_ALL",
    "ONE",
    "ZERO",
    "Atom",
    "AtomicConstraint",
    "Attribute",
    "BeliefModel",
    "BlameEntry",
    "BlameSet",
    "Bound",
    "Cause",
    "CertaintyReport",
    "Column",
    "Competitor",
    "ConditionPart",
    "Conflict",
    "Connective",
    "Consultation",
    "ConsultationRequest",
    "ContributorKind",
    "Degree",
    "Diagnosis",
    "Domain",
    "ElementaryMatch",
    "ExplanationRequest",
    "FactNode",
    "FactsFile",
    "FuzzySubset",
    "GroupTrace",
    "HowTree",
    "InputVector",
    "KnowledgeBase",
    "LayerTrace",
    "MatchPair",
    "MinMaxSystem",
    "OutputFormat",
    "OutputVector",
    "PossibilityDistribution",
    "QueryKind",
    "QueryRequest",
    "RenderedConstraint",
    "RuleMatrix",
    "RulePhrasing",
    "RuleStep",
    "SensitivityCurve",
    "SensitivityReport",
    "Side",
    "SolveResult",
    "SurpriseReport",
    "Term",
    "ThresholdConstraint",
    "ThresholdExplanation",
    "UncertainRule",
    "Verdict",
    "WeightedCondition",
]
