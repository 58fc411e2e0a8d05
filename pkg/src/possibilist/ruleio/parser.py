"""Resolution and validation of parsed knowledge bases, facts and belief models."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from pathlib import Path

from ..core import complement
from ..engine.layers import dependency_layers
from ..errors import CyclicDependencyError, DegreeRangeError
from ..models.degree import ONE, ZERO, Degree
from ..models.fuzzy import CATCH_ALL, Domain, FuzzySubset, PossibilityDistribution
from ..models.matching import ConditionPart, Connective, WeightedCondition
from ..models.rules import (
    Attribute,
    BeliefModel,
    FactsFile,
    KnowledgeBase,
    RulePhrasing,
    Term,
    UncertainRule,
)
from .diagnostics import Diagnostic, ParseResult
from .folding import conflicting_pairs, fold_paired_contexts
from .syntax import (
    AttributeDecl,
    BeliefDecl,
    DomainDecl,
    FactDecl,
    Grade,
    Literal,
    Position,
    RuleDecl,
    TermDecl,
    parse_declarations,
)

logger = logging.getLogger(__name__)

_SECTION = {
    DomainDecl: "DOMAIN",
    AttributeDecl: "ATTRIBUTE",
    TermDecl: "TERM",
    RuleDecl: "RULE",
    FactDecl: "FACT",
    BeliefDecl: "BELIEF",
}

_RESERVED = f"{CATCH_ALL!r} is reserved for the implicit catch-all element"


class _Resolver:
    """Collects diagnostics while declarations are turned into models."""

    def __init__(self) -> None:
        self.diagnostics: list[Diagnostic] = []

    def error(self, code: str, message: str, position: Position) -> None:
        self.diagnostics.append(
            Diagnostic(code=code, message=message, line=position.line, column=position.column)
        )

    def misplaced(self, declarations: Sequence, allowed: tuple[type, ...], where: str) -> list:
        kept = []
        for decl in declarations:
            if isinstance(decl, allowed):
                kept.append(decl)
            else:
                message = f"{_SECTION[type(decl)]} sections do not belong in {where}"
                self.error("E209", message, decl.position)
        return kept

    def degree(self, literal: Literal) -> Degree | None:
        try:
            return Degree.parse(literal.text)
        except DegreeRangeError as exc:
            self.error("E101", str(exc), literal.position)
            return None

    def grades(
        self, grades: Sequence[Grade], domain: Domain, reserved: bool
    ) -> dict[str, Degree] | None:
        """Element degrees; a bare element name means degree 1."""
        result: dict[str, Degree] = {}
        valid = True
        for grade in grades:
            label = grade.element.text
            if reserved and label == CATCH_ALL:
                self.error("E206", _RESERVED, grade.element.position)
                valid = False
                continue
            if label not in domain:
                message = f"{label!r} is not an element of domain {domain.name!r}"
                self.error("E204", message, grade.element.position)
                valid = False
                continue
            if label in result:
                self.error("E205", f"element {label!r} is graded twice", grade.element.position)
                valid = False
                continue
            degree = ONE if grade.degree is None else self.degree(grade.degree)
            if degree is None:
                valid = False
                continue
            result[label] = degree
        return result if valid else None

    def domains(self, declarations: Sequence[DomainDecl]) -> dict[str, Domain]:
        domains: dict[str, Domain] = {}
        for decl in declarations:
            name = decl.name.text
            if name in domains:
                self.error("E205", f"domain {name!r} is declared twice", decl.name.position)
                continue
            labels: list[str] = []
            for element in decl.elements:
                if element.text == CATCH_ALL:
                    self.error("E206", _RESERVED, element.position)
                elif element.text in labels:
                    message = f"element {element.text!r} is listed twice"
                    self.error("E205", message, element.position)
                else:
                    labels.append(element.text)
            if labels:
                domains[name] = Domain(name=name, elements=tuple(labels))
        return domains

    def attributes(
        self,
        declarations: Sequence[AttributeDecl],
        domains: dict[str, Domain],
        concluded: set[str],
    ) -> dict[str, Attribute]:
        attributes: dict[str, Attribute] = {}
        for decl in declarations:
            name = decl.name.text
            if name in attributes:
                self.error("E205", f"attribute {name!r} is declared twice", decl.name.position)
                continue
            domain = domains.get(decl.domain.text)
            if domain is None:
                self.error("E201", f"unknown domain {decl.domain.text!r}", decl.domain.position)
                continue
            open_world = decl.world != "CLOSED"
            attributes[name] = Attribute(
                name=name,
                declared_domain=domain.name,
                open_world=open_world,
                domain=domain.with_catch_all() if open_world and name in concluded else domain,
            )
        return attributes

    def terms(
        self, declarations: Sequence[TermDecl], domains: dict[str, Domain]
    ) -> dict[str, Term]:
        terms: dict[str, Term] = {}
        for decl in declarations:
            key = f"{decl.domain.text}.{decl.name.text}"
            if key in terms:
                self.error("E205", f"term {key!r} is declared twice", decl.name.position)
                continue
            domain = domains.get(decl.domain.text)
            if domain is None:
                self.error("E201", f"unknown domain {decl.domain.text!r}", decl.domain.position)
                continue
            grades = self.grades(decl.grades, domain, reserved=True)
            if grades is not None:
                subset = FuzzySubset.from_mapping(domain, grades)
                terms[key] = Term(name=decl.name.text, domain=domain.name, subset=subset)
        return terms

    def _subset(
        self,
        attribute_name,
        term_name,
        negated: bool,
        attributes: dict[str, Attribute],
        terms: dict[str, Term],
    ) -> tuple[Attribute, FuzzySubset] | None:
        attribute = attributes.get(attribute_name.text)
        if attribute is None:
            message = f"unknown attribute {attribute_name.text!r}"
            self.error("E202", message, attribute_name.position)
            return None
        term = terms.get(f"{attribute.declared_domain}.{term_name.text}")
        if term is None:
            self.error(
                "E203",
                f"unknown term {term_name.text!r} of domain {attribute.declared_domain!r}",
                term_name.position,
            )
            return None
        subset = term.subset.restrict_to(attribute.domain)
        return attribute, complement(subset) if negated else subset

    def rule(
        self, decl: RuleDecl, attributes: dict[str, Attribute], terms: dict[str, Term]
    ) -> UncertainRule | None:
        before = len(self.diagnostics)
        rule_id = decl.name.text

        parts = []
        for part in decl.condition.parts:
            resolved = self._subset(part.attribute, part.term, part.negated, attributes, terms)
            weight = ONE if part.weight is None else self.degree(part.weight)
            if resolved is None or weight is None:
                continue
            parts.append(
                ConditionPart(
                    attribute=part.attribute.text,
                    term=part.term.text,
                    negated=part.negated,
                    weight=weight,
                    pattern=resolved[1],
                )
            )
        connectives = set(decl.condition.connectives)
        if len(connectives) > 1:
            message = f"rule {rule_id!r} mixes AND and OR in one condition"
            self.error("E304", message, decl.condition.position)
        connective = Connective.DISJUNCTION if connectives == {"OR"} else Connective.CONJUNCTION
        if len(parts) == len(decl.condition.parts) and max(p.weight for p in parts) != ONE:
            message = f"weights of rule {rule_id!r} must reach 1 for some condition"
            self.error("E301", message, decl.condition.position)

        target = decl.conclusion
        resolved = self._subset(target.attribute, target.term, target.negated, attributes, terms)
        if resolved is not None and not resolved[1].is_normalized:
            message = f"conclusion of rule {rule_id!r} has no element at degree 1"
            self.error("E303", message, target.position)

        values = {"s": ONE, "r": ZERO}
        seen: set[str] = set()
        for param in decl.params:
            key = param.name.text
            if key not in values:
                message = f"unknown uncertainty parameter {key!r}; use s or r"
                self.error("E208", message, param.name.position)
                continue
            if key in seen:
                self.error("E205", f"parameter {key!r} is given twice", param.name.position)
            seen.add(key)
            value = self.degree(param.value)
            if value is not None:
                values[key] = value

        sources: tuple[str, ...] = ()
        if decl.otherwise is not None:
            if "s" in seen:
                self.error(
                    "E207",
                    f"rule {rule_id!r} describes its failing context in both WITH and OTHERWISE",
                    decl.otherwise.position,
                )
            for param in decl.otherwise.params:
                if param.name.text != "s":
                    self.error("E208", "OTHERWISE only sets s", param.name.position)
                    continue
                value = self.degree(param.value)
                if value is not None:
                    values["s"] = value
            alias = decl.otherwise.alias
            sources = (rule_id, alias.text) if alias is not None else (rule_id,)

        if len(self.diagnostics) > before or resolved is None:
            return None
        phrasing = None
        if decl.phrasing:
            phrasing = RulePhrasing(holds=decl.phrasing[0], fails=decl.phrasing[1])
        return UncertainRule(
            id=rule_id,
            condition=WeightedCondition(parts=tuple(parts), connective=connective),
            conclusion_attribute=target.attribute.text,
            conclusion_term=target.term.text,
            conclusion_negated=target.negated,
            conclusion=resolved[1],
            s=values["s"],
            r=values["r"],
            phrasing=phrasing,
            sources=sources,
        )


def _of(declarations: Sequence, kind: type) -> list:
    return [decl for decl in declarations if isinstance(decl, kind)]


def _finish(result: ParseResult, what: str) -> ParseResult:
    if result.diagnostics:
        logger.info("%s: %d diagnostic(s)", what, len(result.diagnostics))
    return result


def parse_kb(text: str) -> ParseResult[KnowledgeBase]:
    """Parse and validate a knowledge base; never raises."""
    declarations, diagnostics = parse_declarations(text)
    if diagnostics:
        return _finish(ParseResult[KnowledgeBase](diagnostics=diagnostics), "knowledge base")

    resolver = _Resolver()
    declarations = resolver.misplaced(
        declarations, (DomainDecl, AttributeDecl, TermDecl, RuleDecl), "a knowledge base"
    )
    rule_decls = _of(declarations, RuleDecl)
    domains = resolver.domains(_of(declarations, DomainDecl))
    concluded = {decl.conclusion.attribute.text for decl in rule_decls}
    attributes = resolver.attributes(_of(declarations, AttributeDecl), domains, concluded)
    terms = resolver.terms(_of(declarations, TermDecl), domains)

    rules: list[UncertainRule] = []
    positions: dict[str, Position] = {}
    for decl in rule_decls:
        names = [decl.name]
        if decl.otherwise and decl.otherwise.alias:
            names.append(decl.otherwise.alias)
        duplicate = False
        for name in names:
            if name.text in positions:
                resolver.error("E205", f"rule {name.text!r} is declared twice", name.position)
                duplicate = True
            positions[name.text] = decl.position
        rule = resolver.rule(decl, attributes, terms)
        if rule is not None and not duplicate:
            rules.append(rule)

    for first, second in conflicting_pairs(rules):
        resolver.error(
            "E207",
            f"rules {first.id!r} and {second.id!r} both fix the context where the condition fails",
            positions[second.id],
        )
    rules = fold_paired_contexts(rules)

    try:
        dependency_layers(rules)
    except CyclicDependencyError as exc:
        culprit = next(rule.id for rule in rules if rule.conclusion_attribute in exc.cycle)
        resolver.error("E401", str(exc), positions[culprit])

    if resolver.diagnostics:
        failed = ParseResult[KnowledgeBase](diagnostics=resolver.diagnostics)
        return _finish(failed, "knowledge base")
    kb = KnowledgeBase(domains=domains, attributes=attributes, terms=terms, rules=tuple(rules))
    logger.info("knowledge base with %d rule(s) over %d attribute(s)", len(rules), len(attributes))
    return ParseResult[KnowledgeBase](value=kb)


def _distribution(
    resolver: _Resolver, decl: FactDecl | BeliefDecl, kb: KnowledgeBase, seen: set[str]
) -> tuple[Attribute, PossibilityDistribution] | None:
    name = decl.attribute.text
    attribute = kb.attributes.get(name)
    if attribute is None:
        resolver.error("E202", f"unknown attribute {name!r}", decl.attribute.position)
        return None
    if name in seen:
        resolver.error("E205", f"attribute {name!r} is given twice", decl.attribute.position)
        return None
    seen.add(name)
    if decl.grades is None:
        return attribute, PossibilityDistribution.ignorance(attribute.domain)
    grades = resolver.grades(decl.grades, attribute.domain, reserved=False)
    if grades is None:
        return None
    return attribute, PossibilityDistribution.from_mapping(attribute.domain, grades)


def parse_facts(text: str, kb: KnowledgeBase, permissive: bool = False) -> ParseResult[FactsFile]:
    """Parse facts against ``kb``; subnormal facts are rejected unless ``permissive``."""
    declarations, diagnostics = parse_declarations(text)
    if diagnostics:
        return _finish(ParseResult[FactsFile](diagnostics=diagnostics), "facts")

    resolver = _Resolver()
    facts: dict[str, PossibilityDistribution] = {}
    seen: set[str] = set()
    for decl in resolver.misplaced(declarations, (FactDecl,), "a facts file"):
        resolved = _distribution(resolver, decl, kb, seen)
        if resolved is None:
            continue
        attribute, distribution = resolved
        if not distribution.is_normalized:
            if not permissive:
                resolver.error(
                    "E302",
                    f"fact about {attribute.name!r} is subnormal (height {distribution.height})",
                    decl.position,
                )
                continue
            logger.warning("accepting subnormal fact about %s", attribute.name)
        facts[attribute.name] = distribution

    if resolver.diagnostics:
        return _finish(ParseResult[FactsFile](diagnostics=resolver.diagnostics), "facts")
    return ParseResult[FactsFile](value=FactsFile(facts=facts))


def parse_beliefs(text: str, kb: KnowledgeBase) -> ParseResult[BeliefModel]:
    """Parse a belief model; every belief must be normalized."""
    declarations, diagnostics = parse_declarations(text)
    if diagnostics:
        return _finish(ParseResult[BeliefModel](diagnostics=diagnostics), "beliefs")

    resolver = _Resolver()
    beliefs: dict[str, FuzzySubset] = {}
    seen: set[str] = set()
    for decl in resolver.misplaced(declarations, (BeliefDecl,), "a belief model"):
        resolved = _distribution(resolver, decl, kb, seen)
        if resolved is None:
            continue
        attribute, distribution = resolved
        if not distribution.is_normalized:
            message = f"belief about {attribute.name!r} is not normalized"
            resolver.error("E302", message, decl.position)
            continue
        beliefs[attribute.name] = distribution.as_subset()

    if resolver.diagnostics:
        return _finish(ParseResult[BeliefModel](diagnostics=resolver.diagnostics), "beliefs")
    return ParseResult[BeliefModel](value=BeliefModel(beliefs=beliefs))


def read_source(path: str | Path) -> ParseResult[str]:
    """File contents, or an E501 diagnostic when the file cannot be read."""
    try:
        return ParseResult[str](value=Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as exc:
        diagnostic = Diagnostic(code="E501", message=f"cannot read {path}: {exc}")
        return ParseResult[str](diagnostics=[diagnostic])
