"""Text and JSON serialization; parsing what is written here gives back the same value."""

from __future__ import annotations

import json
from collections.abc import Mapping
from typing import Any

from pydantic import BaseModel

from ..models.degree import ONE, ZERO, Degree
from ..models.matching import Connective
from ..models.rules import BeliefModel, FactsFile, KnowledgeBase, UncertainRule


def _grades(pairs, keep_zero_first: bool = False) -> str:
    """``a, b=0.5``: degree 1 is implicit, degree 0 is omitted."""
    pairs = list(pairs)
    written = [
        label if degree == ONE else f"{label}={degree}" for label, degree in pairs if degree > ZERO
    ]
    if not written and keep_zero_first:
        label, degree = pairs[0]
        written = [f"{label}={degree}"]
    return ", ".join(written)


def _quote(text: str) -> str:
    return json.dumps(text, ensure_ascii=False)


def _rule(rule: UncertainRule) -> list[str]:
    keyword = " OR " if rule.condition.connective is Connective.DISJUNCTION else " AND "
    parts = []
    for part in rule.condition.parts:
        text = f"{part.attribute} IS {'NOT ' if part.negated else ''}{part.term}"
        if part.weight != ONE:
            text += f" WEIGHT {part.weight}"
        parts.append(text)

    negation = "NOT " if rule.conclusion_negated else ""
    lines = [
        f"RULE {rule.id}",
        f"  IF {keyword.join(parts)}",
        f"  THEN {rule.conclusion_attribute} IS {negation}{rule.conclusion_term}",
    ]
    if rule.sources:
        lines.append(f"  WITH r = {rule.r}")
        alias = f"AS {rule.sources[1]} " if len(rule.sources) > 1 else ""
        lines.append(f"  OTHERWISE {alias}s = {rule.s}")
    else:
        lines.append(f"  WITH s = {rule.s}, r = {rule.r}")
    if rule.phrasing is not None:
        lines.append(f"  SAY {_quote(rule.phrasing.holds)} / {_quote(rule.phrasing.fails)}")
    lines.append("END")
    return lines


def serialize_kb(kb: KnowledgeBase) -> str:
    lines: list[str] = []
    for domain in kb.domains.values():
        lines.append(f"DOMAIN {domain.name} = {', '.join(domain.elements)}")
    if kb.domains:
        lines.append("")
    for attribute in kb.attributes.values():
        world = "OPEN" if attribute.open_world else "CLOSED"
        lines.append(f"ATTRIBUTE {attribute.name} OF {attribute.declared_domain} {world}")
    if kb.attributes:
        lines.append("")
    for term in kb.terms.values():
        lines.append(f"TERM {term.key} = {_grades(term.subset.items(), keep_zero_first=True)}")
    if kb.terms:
        lines.append("")
    for rule in kb.rules:
        lines.extend(_rule(rule))
        lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n" if lines else ""


def serialize_facts(facts: FactsFile) -> str:
    lines = []
    for attribute, distribution in facts.facts.items():
        if distribution.is_ignorance:
            lines.append(f"FACT {attribute} = UNKNOWN")
        else:
            grades = _grades(distribution.items(), keep_zero_first=True)
            lines.append(f"FACT {attribute} = {grades}")
    return "".join(line + "\n" for line in lines)


def serialize_beliefs(beliefs: BeliefModel) -> str:
    return "".join(
        f"BELIEF {attribute} = {_grades(belief.items())}\n"
        for attribute, belief in beliefs.beliefs.items()
    )


def serialize_report(report: BaseModel | Mapping[str, Any]) -> str:
    """Deterministic JSON: sorted keys, degrees as exact decimal strings."""
    data = report.model_dump(mode="json") if isinstance(report, BaseModel) else _plain(report)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _plain(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, Mapping):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, Degree):
        return str(value)
    return value


def serialize(value: KnowledgeBase | FactsFile | BeliefModel | BaseModel) -> str:
    """Text form for knowledge bases, facts and beliefs; JSON for any report."""
    if isinstance(value, KnowledgeBase):
        return serialize_kb(value)
    if isinstance(value, FactsFile):
        return serialize_facts(value)
    if isinstance(value, BeliefModel):
        return serialize_beliefs(value)
    return serialize_report(value)
