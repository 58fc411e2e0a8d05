"""Propagation of match degrees through one uncertain rule."""

from __future__ import annotations

from ..core import complement
from ..errors import NotNormalizedError
from ..models.degree import ONE, ZERO, Degree
from ..models.fuzzy import FuzzySubset, PossibilityDistribution
from ..models.matching import MatchPair
from ..models.rules import UncertainRule


def propagate(rule: UncertainRule, m: MatchPair) -> tuple[Degree, Degree]:
    """Max-min product of the rule matrix [[1, s], [r, 1]] with (pos, neg).

    Returns (alpha, beta): the possibility that the conclusion holds, and that
    it does not. The unsimplified form is used so subnormal pairs stay sound.
    """
    alpha = max(m.pos, min(rule.s, m.neg))
    beta = max(min(rule.r, m.pos), m.neg)
    return alpha, beta


def induce(conclusion: FuzzySubset, alpha: Degree, beta: Degree) -> PossibilityDistribution:
    """Distribution induced on the conclusion: min(max(mu_E, beta), max(mu_notE, alpha))."""
    return PossibilityDistribution(
        domain=conclusion.domain,
        pi=tuple(min(max(m, beta), max(m.complement(), alpha)) for m in conclusion.mu),
    )


def induce_crisp(conclusion: FuzzySubset, alpha: Degree, beta: Degree) -> PossibilityDistribution:
    """The max-min form max(min(mu_E, alpha), min(mu_notE, beta)).

    Equal to :func:`induce` for crisp E.
    """
    outside = complement(conclusion)
    return PossibilityDistribution(
        domain=conclusion.domain,
        pi=tuple(max(min(m, alpha), min(n, beta)) for m, n in zip(conclusion.mu, outside.mu)),
    )


def decompose_fuzzy_conclusion(
    rule: UncertainRule, base_r: Degree | None = None
) -> list[UncertainRule]:
    """Approximate a fuzzy-conclusion rule by nested crisp-conclusion rules.

    With levels 1 = t_1 > ... > t_k of mu_E, rule j concludes on the cut
    {mu_E >= t_j} with r_j = max(t_{j+1}, base_r). The more precise the
    conclusion, the more uncertain the rule.
    """
    if rule.is_crisp:
        return [rule]
    base_r = rule.r if base_r is None else base_r
    levels = rule.conclusion.levels()
    if not levels or levels[0] != ONE:
        raise NotNormalizedError(f"fuzzy conclusion of rule {rule.id!r} is not normalized")

    prefix = "not " if rule.conclusion_negated else ""
    pieces = []
    for j, level in enumerate(levels):
        following = levels[j + 1] if j + 1 < len(levels) else ZERO
        pieces.append(
            rule.model_copy(
                update={
                    "id": f"{rule.id}@{level}",
                    "conclusion_term": f"{prefix}{rule.conclusion_term}@{level}",
                    "conclusion_negated": False,
                    "conclusion": rule.conclusion.alpha_cut(level),
                    "r": max(following, base_r),
                    "sources": rule.source_ids,
                }
            )
        )
    return pieces
