"""Consultations and explanation queries, shared by the command line and the HTTP API."""

from __future__ import annotations

import logging
from typing import Any

from pydantic import BaseModel

from ..config import Settings
from ..engine import run_layers
from ..errors import MissingBeliefError
from ..explain import (
    certainty_view,
    diagnose_imprecision,
    explain_mainly,
    explain_negative,
    explain_positive,
    sensitivity,
    surprise,
    trace_how,
)
from ..explain import render
from ..models.consultation import Consultation
from ..models.query import QueryKind, QueryRequest
from ..models.rules import Attribute, BeliefModel, KnowledgeBase
from ..ruleio import parse_beliefs, parse_facts, parse_kb
from ..solver import solve_exact

logger = logging.getLogger(__name__)


class ConsultationService:
    """Runs consultations and answers explanation queries on them."""

    def __init__(self, settings: Settings):
        self.settings = settings

    def load_kb(self, text: str, source: str = "<kb>") -> KnowledgeBase:
        return parse_kb(text).unwrap(source)

    def consult(
        self,
        kb_text: str,
        facts_text: str = "",
        permissive: bool | None = None,
        kb_source: str = "<kb>",
        facts_source: str = "<facts>",
    ) -> tuple[KnowledgeBase, Consultation]:
        """Parse both texts and run every rule layer."""
        permissive = self.settings.permissive_facts if permissive is None else permissive
        kb = self.load_kb(kb_text, kb_source)
        facts = parse_facts(facts_text, kb, permissive=permissive).unwrap(facts_source)
        consultation = run_layers(kb, facts)
        derived = ", ".join(consultation.derived_attributes) or "nothing"
        logger.info("consultation derived %s", derived)
        return kb, consultation

    def load_beliefs(self, kb: KnowledgeBase, text: str, source: str = "<belief>") -> BeliefModel:
        return parse_beliefs(text, kb).unwrap(source)

    @staticmethod
    def attributes_of(consultation: Consultation) -> KnowledgeBase:
        """A rule-free knowledge base over the attributes a replayed consultation knows."""
        attributes = {
            name: Attribute(name=name, declared_domain=domain.name, domain=domain)
            for name, domain in consultation.domains.items()
        }
        return KnowledgeBase(attributes=attributes)

    def inverse_inputs(self, consultation: Consultation, attribute: str) -> dict[str, Any]:
        """Every input vector that reproduces the atom degrees of ``attribute``."""
        group = consultation.group(attribute)
        iv = group.input_vector
        result = solve_exact(
            group.matrix.rows,
            group.output.degrees,
            iv.coupling,
            limit=self.settings.max_enumerated_solutions,
        )
        return {
            "columns": [column.label for column in group.matrix.columns],
            "solution": result.model_dump(mode="json"),
        }

    def consultation_report(
        self, consultation: Consultation, atoms: bool = False
    ) -> dict[str, Any]:
        """Structured document: derived distributions, optional atom tables, and the full trace."""
        attributes: dict[str, Any] = {}
        for attribute in consultation.derived_attributes:
            distribution = consultation.distribution(attribute)
            entry: dict[str, Any] = {
                "distribution": {label: str(degree) for label, degree in distribution.items()},
                "height": str(distribution.height),
                "subnormality": str(distribution.subnormality),
                "layer": consultation.layer_of(attribute),
            }
            if atoms:
                group = consultation.group(attribute)
                entry["atoms"] = [
                    {
                        "members": list(atom.members),
                        "signature": atom.describe(group.rule_ids),
                        "degree": str(degree),
                    }
                    for atom, degree in zip(group.output.atoms, group.output.degrees)
                ]
                entry["inputs"] = self.inverse_inputs(consultation, attribute)
            attributes[attribute] = entry
        return {"attributes": attributes, "trace": consultation.model_dump(mode="json")}

    def render_consultation(self, consultation: Consultation, atoms: bool = False) -> str:
        return render.render_consultation(consultation, atoms)

    def answer(
        self,
        consultation: Consultation,
        query: QueryRequest,
        beliefs: BeliefModel | None = None,
        with_rules: bool | None = None,
    ) -> tuple[BaseModel, str]:
        """The report for ``query`` and its human rendering."""
        with_rules = self.settings.include_rule_uncertainty if with_rules is None else with_rules
        attribute, element = query.attribute, query.element

        if query.kind is QueryKind.HOW:
            threshold = query.threshold
            if threshold is None:
                threshold = self.settings.display_threshold
            tree = trace_how(consultation, attribute, threshold)
            return tree, render.render_how(tree)
        if query.kind is QueryKind.MAINLY:
            blame = explain_mainly(consultation, attribute, element)
            return blame, render.render_blame(blame, consultation.group(attribute), with_rules)
        if query.kind is QueryKind.WHY_AT_LEAST:
            explanation = explain_positive(consultation, attribute, element, query.threshold)
            return explanation, render.render_threshold(explanation)
        if query.kind is QueryKind.WHY_AT_MOST:
            explanation = explain_negative(consultation, attribute, element, query.threshold)
            return explanation, render.render_threshold(explanation)
        if query.kind is QueryKind.CERTAINTY:
            report = certainty_view(consultation, attribute, element)
            derived = consultation.layer_of(attribute) is not None
            group = consultation.group(attribute) if derived else None
            return report, render.render_certainty(report, group, with_rules)
        if query.kind is QueryKind.SURPRISE:
            if beliefs is None:
                raise MissingBeliefError("surprise queries need a belief model")
            report = surprise(consultation, attribute, beliefs)
            return report, render.render_surprise(report)
        if query.kind is QueryKind.DIAGNOSE:
            diagnosis = diagnose_imprecision(consultation, attribute)
            return diagnosis, render.render_diagnosis(diagnosis, consultation.group(attribute))
        if query.kind is QueryKind.SENSITIVITY:
            report = sensitivity(consultation, attribute, element, query.rule, query.side)
            return report, render.render_sensitivity(report)
        raise ValueError(f"{query.kind.value} is not an explanation query")
