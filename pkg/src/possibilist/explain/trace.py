"""How-explanations: the derivation tree of an attribute and its replay."""

from __future__ import annotations

import logging

from ..engine.layers import evaluate_group
from ..models.consultation import Consultation
from ..models.degree import Degree
from ..models.explanation import FactNode, HowTree
from ..models.fuzzy import PossibilityDistribution

logger = logging.getLogger(__name__)


def trace_how(
    consultation: Consultation, attribute: str, threshold: Degree | None = None
) -> HowTree:
    """Derivation tree of ``attribute``, cascading into the layers its facts came from.

    Rule steps whose alpha and beta both reach ``threshold`` are listed in
    ``pruned``; they stay in the tree so replay remains exact.
    """
    distribution = consultation.distribution(attribute)
    layer = consultation.layer_of(attribute)
    if layer is None:
        node = FactNode(
            attribute=attribute, distribution=distribution, stated=attribute in consultation.facts
        )
        return HowTree(attribute=attribute, facts=(node,), distribution=distribution)

    group = consultation.group(attribute)
    read = dict.fromkeys(name for rule in group.rules for name in rule.condition.attributes)
    facts = tuple(
        FactNode(
            attribute=name,
            distribution=consultation.distribution(name),
            stated=name in consultation.facts,
            upstream=trace_how(consultation, name, threshold)
            if consultation.layer_of(name) is not None
            else None,
        )
        for name in read
    )
    pruned = ()
    if threshold is not None:
        pruned = tuple(
            step.rule.id for step in group.steps if min(step.alpha, step.beta) >= threshold
        )
        logger.debug("display threshold %s hides %s for %s", threshold, pruned, attribute)
    return HowTree(
        attribute=attribute,
        layer=layer,
        facts=facts,
        group=group,
        distribution=distribution,
        pruned=pruned,
    )


def replay(tree: HowTree) -> PossibilityDistribution:
    """Re-evaluate a derivation tree from its facts."""
    if tree.group is None:
        return tree.distribution
    known = {
        node.attribute: replay(node.upstream) if node.upstream is not None else node.distribution
        for node in tree.facts
    }
    return evaluate_group(tree.group.rules, known, tree.group.stated_fact).distribution
