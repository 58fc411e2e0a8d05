"""Chaining rule groups into inference layers."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from graphlib import CycleError, TopologicalSorter

from ..core import min_combine
from ..errors import CyclicDependencyError
from ..matching import fact_for, match_condition
from ..models.consultation import Consultation, ElementaryMatch, GroupTrace, LayerTrace, RuleStep
from ..models.fuzzy import PossibilityDistribution
from ..models.rules import FactsFile, KnowledgeBase, UncertainRule
from .combination import build_rule_matrix, combine_group, input_vector
from .propagation import decompose_fuzzy_conclusion, induce, propagate

logger = logging.getLogger(__name__)


def dependency_graph(rules: Sequence[UncertainRule]) -> dict[str, set[str]]:
    """Derived attribute -> attributes its rules' conditions read."""
    graph: dict[str, set[str]] = {}
    for rule in rules:
        graph.setdefault(rule.conclusion_attribute, set()).update(rule.condition.attributes)
    return graph


def dependency_layers(rules: Sequence[UncertainRule]) -> list[list[str]]:
    """Derived attributes grouped into layers; each layer only reads earlier ones."""
    graph = dependency_graph(rules)
    order = list(graph)
    sorter = TopologicalSorter(graph)
    try:
        sorter.prepare()
    except CycleError as exc:
        raise CyclicDependencyError(list(exc.args[1])) from exc

    layers = []
    while sorter.is_active():
        ready = sorter.get_ready()
        derived = sorted((a for a in ready if a in graph), key=order.index)
        if derived:
            layers.append(derived)
        sorter.done(*ready)
    return layers


def evaluate_group(
    rules: Sequence[UncertainRule],
    known: Mapping[str, PossibilityDistribution],
    stated_fact: PossibilityDistribution | None = None,
) -> GroupTrace:
    """Match, propagate and combine every rule concluding on one attribute."""
    steps = []
    for written in rules:
        match, elementary = match_condition(written.condition, known)
        details = tuple(
            ElementaryMatch(
                attribute=part.attribute,
                term=part.term,
                negated=part.negated,
                weight=part.weight,
                fact=fact_for(part.attribute, part.pattern, known),
                pair=pair,
            )
            for part, pair in zip(written.condition.parts, elementary)
        )
        for rule in decompose_fuzzy_conclusion(written):
            alpha, beta = propagate(rule, match)
            steps.append(
                RuleStep(
                    rule=rule,
                    elementary=details,
                    match=match,
                    alpha=alpha,
                    beta=beta,
                    induced=induce(rule.conclusion, alpha, beta),
                )
            )

    crisp_rules = [step.rule for step in steps]
    iv = input_vector(crisp_rules, [step.match for step in steps])
    atoms, output, derived = combine_group(crisp_rules, iv)
    final = derived if stated_fact is None else min_combine(derived, stated_fact)
    attribute = crisp_rules[0].conclusion_attribute
    logger.debug(
        "evaluated %s with %d rule(s) over %d atom(s); height %s",
        attribute,
        len(crisp_rules),
        len(atoms),
        final.height,
    )
    return GroupTrace(
        attribute=attribute,
        domain=derived.domain,
        steps=tuple(steps),
        matrix=build_rule_matrix(crisp_rules, atoms),
        output=output,
        derived=derived,
        stated_fact=stated_fact,
        distribution=final,
    )


def run_layers(
    kb: KnowledgeBase, facts: FactsFile | Mapping[str, PossibilityDistribution]
) -> Consultation:
    """Evaluate rule groups in dependency order; each layer's conclusions feed the next."""
    stated = dict(facts.facts if isinstance(facts, FactsFile) else facts)
    known: dict[str, PossibilityDistribution] = dict(stated)
    layers = []
    for index, attributes in enumerate(dependency_layers(kb.rules)):
        groups = []
        for attribute in attributes:
            group = evaluate_group(kb.rules_for(attribute), known, stated.get(attribute))
            groups.append(group)
        for group in groups:
            known[group.attribute] = group.distribution
        layers.append(LayerTrace(index=index, groups=tuple(groups)))
        logger.debug("layer %d derived %s", index, attributes)

    return Consultation(
        domains={name: attribute.domain for name, attribute in kb.attributes.items()},
        facts=stated,
        layers=tuple(layers),
        distributions=known,
    )
