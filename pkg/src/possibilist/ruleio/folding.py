"""Folding of paired-context rules into single two-column rules.

``if p then E (s=1, r)`` together with ``if not p then not E (s=1, r')``
says ``pi(E | not p) = r'``, which is exactly the rule ``if p then E`` with
``s = r'``. Both forms induce the same distribution on every match pair.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from ..models.degree import ONE
from ..models.matching import WeightedCondition
from ..models.rules import RulePhrasing, UncertainRule

logger = logging.getLogger(__name__)


def conditions_complementary(a: WeightedCondition, b: WeightedCondition) -> bool:
    """True when ``b`` is the De Morgan negation of ``a`` with every weight at 1."""
    if len(a.parts) != len(b.parts):
        return False
    if len(a.parts) > 1 and a.connective == b.connective:
        return False
    return all(
        x.attribute == y.attribute
        and x.term == y.term
        and x.negated != y.negated
        and x.weight == ONE
        and y.weight == ONE
        for x, y in zip(a.parts, b.parts)
    )


def contexts_paired(a: UncertainRule, b: UncertainRule) -> bool:
    """``b`` concludes the negation of ``a``'s conclusion under the negation of its condition."""
    return (
        a.id != b.id
        and a.conclusion_attribute == b.conclusion_attribute
        and a.conclusion_term == b.conclusion_term
        and a.conclusion_negated != b.conclusion_negated
        and conditions_complementary(a.condition, b.condition)
    )


def can_fold(a: UncertainRule, b: UncertainRule) -> bool:
    """Both rules leave the other context open (s = 1), so neither fixes it twice."""
    return contexts_paired(a, b) and a.s == ONE and b.s == ONE and not a.sources and not b.sources


def fold(a: UncertainRule, b: UncertainRule) -> UncertainRule:
    phrasing = a.phrasing
    if phrasing is None and b.phrasing is not None:
        phrasing = RulePhrasing(holds=b.phrasing.fails, fails=b.phrasing.holds)
    return a.model_copy(update={"s": b.r, "phrasing": phrasing, "sources": (a.id, b.id)})


def fold_paired_contexts(rules: Sequence[UncertainRule]) -> list[UncertainRule]:
    """Fold every foldable paired-context couple; the folded rule keeps the first one's place."""
    folded: list[UncertainRule] = []
    consumed: set[int] = set()
    for i, rule in enumerate(rules):
        if i in consumed:
            continue
        for j in range(i + 1, len(rules)):
            if j not in consumed and can_fold(rule, rules[j]):
                logger.info("folding rule %s into rule %s", rules[j].id, rule.id)
                rule = fold(rule, rules[j])
                consumed.add(j)
                break
        folded.append(rule)
    return folded


def conflicting_pairs(rules: Sequence[UncertainRule]) -> list[tuple[UncertainRule, UncertainRule]]:
    """Paired contexts that both constrain the same context and cannot be folded."""
    return [
        (a, b)
        for i, a in enumerate(rules)
        for b in rules[i + 1 :]
        if contexts_paired(a, b) and not can_fold(a, b)
    ]
