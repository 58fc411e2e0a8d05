"""Fuzzy pattern matching of conditions against facts, and weighted aggregation."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence

from .core import complement, consistency
from .errors import WeightNormalizationError
from .models.degree import ONE, Degree
from .models.fuzzy import FuzzySubset, PossibilityDistribution
from .models.matching import Connective, MatchPair, WeightedCondition

logger = logging.getLogger(__name__)


def match_elementary(pattern: FuzzySubset, fact: PossibilityDistribution) -> MatchPair:
    """Possibility that the fact satisfies the pattern, and that it does not."""
    return MatchPair(
        pos=consistency(pattern, fact),
        neg=consistency(complement(pattern), fact),
        subnormal_fact=not fact.is_normalized,
    )


def aggregate(
    pairs: Sequence[MatchPair],
    weights: Sequence[Degree],
    connective: Connective = Connective.CONJUNCTION,
) -> MatchPair:
    """Combine elementary match pairs of logically independent conditions.

    Conjunction: pos = min_i max(pos_i, 1 - w_i), neg = max_i min(neg_i, w_i).
    Disjunction swaps min and max and reads 1 - w_i where w_i stood, which
    gives pos = max_i min(pos_i, w_i), neg = min_i max(neg_i, 1 - w_i).
    """
    if len(pairs) != len(weights) or not pairs:
        raise ValueError(f"{len(pairs)} match pairs for {len(weights)} weights")
    if max(weights) != ONE:
        raise WeightNormalizationError("importance weights must satisfy max w_i = 1")

    if connective is Connective.CONJUNCTION:
        pos = min(max(p.pos, w.complement()) for p, w in zip(pairs, weights))
        neg = max(min(p.neg, w) for p, w in zip(pairs, weights))
    else:
        pos = max(min(p.pos, w) for p, w in zip(pairs, weights))
        neg = min(max(p.neg, w.complement()) for p, w in zip(pairs, weights))
    return MatchPair(pos=pos, neg=neg, subnormal_fact=any(p.subnormal_fact for p in pairs))


def fact_for(
    attribute: str, pattern: FuzzySubset, facts: Mapping[str, PossibilityDistribution]
) -> PossibilityDistribution:
    """The fact about ``attribute``; total ignorance when nothing is known."""
    fact = facts.get(attribute)
    if fact is None:
        return PossibilityDistribution.ignorance(pattern.domain)
    return fact


def match_condition(
    condition: WeightedCondition, facts: Mapping[str, PossibilityDistribution]
) -> tuple[MatchPair, tuple[MatchPair, ...]]:
    """Match every part of a compound condition and aggregate the results."""
    elementary = tuple(
        match_elementary(part.pattern, fact_for(part.attribute, part.pattern, facts))
        for part in condition.parts
    )
    combined = aggregate(elementary, condition.weights, condition.connective)
    if combined.subnormal_fact:
        logger.warning("condition on %s matched against a subnormal fact", condition.attributes)
    return combined, elementary
