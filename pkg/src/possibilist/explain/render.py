"""Human-readable rendering of consultations and explanations in fact language."""

from __future__ import annotations

from ..models.consultation import Consultation, GroupTrace
from ..models.degree import ONE, ZERO, Degree
from ..models.explanation import (
    BlameEntry,
    BlameSet,
    CertaintyReport,
    ContributorKind,
    Diagnosis,
    HowTree,
    SensitivityReport,
    SurpriseReport,
    ThresholdExplanation,
    Verdict,
)
from ..models.fuzzy import PossibilityDistribution
from ..models.rules import UncertainRule
from ..models.system import Bound, Side

_SYMBOL = {Bound.AT_LEAST: "≥", Bound.AT_MOST: "≤"}


def phrase(rule: UncertainRule, side: Side) -> str | None:
    """The sentence for a rule's condition holding (lambda) or failing (rho)."""
    if rule.phrasing is None:
        return None
    return rule.phrasing.holds if side is Side.LAMBDA else rule.phrasing.fails


def symbolic(rule_id: str, side: Side, bound: Bound, threshold: Degree) -> str:
    return f"{side.symbol}_{rule_id} {_SYMBOL[bound]} {threshold}"


def constraint_text(rule: UncertainRule, side: Side, bound: Bound, threshold: Degree) -> str:
    sentence = phrase(rule, side)
    if sentence is None:
        return symbolic(rule.id, side, bound, threshold)
    extent = "at least" if bound is Bound.AT_LEAST else "at most"
    return f"it should be possible {extent} at the degree {threshold} that {sentence}"


def contributor_text(rule: UncertainRule, entry: BlameEntry) -> str:
    if entry.kind is ContributorKind.RULE:
        if entry.parameter == "s":
            return (
                f"rule {rule.id} still leaves its conclusion possible at the degree "
                f"{entry.value} when its condition fails"
            )
        return f"rule {rule.id} admits exceptions at the degree {entry.value}"

    opposite = Side.RHO if entry.side is Side.LAMBDA else Side.LAMBDA
    sentence = phrase(rule, opposite)
    if sentence is None:
        return f"{entry.label} = {entry.value}"
    if entry.value == ZERO:
        return f"it is certain that {sentence}"
    return f"it is somewhat certain (at the degree {entry.value.complement()}) that {sentence}"


def stated_text(attribute: str, entry: BlameEntry) -> str:
    return f"the fact stated on {attribute} only allows it at the degree {entry.value}"


def render_distribution(attribute: str, distribution: PossibilityDistribution) -> list[str]:
    width = max(len(label) for label in distribution.domain)
    lines = [f"{attribute}:"]
    lines.extend(f"  {label:<{width}}  {degree}" for label, degree in distribution.items())
    if not distribution.is_normalized:
        lines.append(f"  (subnormal: degree {distribution.subnormality})")
    return lines


def render_atoms(group: GroupTrace) -> list[str]:
    lines = [f"atoms of {group.attribute}:"]
    for atom, degree in zip(group.output.atoms, group.output.degrees):
        lines.append(
            f"  {atom.describe(group.rule_ids)}  {{{', '.join(atom.members)}}}  {degree}"
        )
    return lines


def render_consultation(consultation: Consultation, atoms: bool = False) -> str:
    lines: list[str] = []
    for attribute in consultation.derived_attributes:
        lines.extend(render_distribution(attribute, consultation.distribution(attribute)))
        if atoms:
            lines.extend(render_atoms(consultation.group(attribute)))
    return "\n".join(lines)


def render_how(tree: HowTree, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if tree.group is None:
        stated = bool(tree.facts) and tree.facts[0].stated
        origin = "stated fact" if stated else "unknown (total ignorance)"
        lines.append(f"{pad}{tree.attribute}: {origin}")
        rendered = render_distribution(tree.attribute, tree.distribution)
        lines.extend(pad + line for line in rendered[1:])
        return "\n".join(lines)

    lines.append(f"{pad}{tree.attribute} (layer {tree.layer})")
    for node in tree.facts:
        if node.upstream is not None:
            lines.append(f"{pad}  fact {node.attribute}, derived:")
            lines.append(render_how(node.upstream, indent + 2))
        else:
            values = ", ".join(f"{label}={degree}" for label, degree in node.distribution.items())
            origin = "stated" if node.stated else "unknown"
            lines.append(f"{pad}  fact {node.attribute} ({origin}): {values}")
    for step in tree.group.steps:
        if step.rule.id in tree.pruned:
            hidden = f"hidden (alpha={step.alpha}, beta={step.beta})"
            lines.append(f"{pad}  rule {step.rule.id}: {hidden}")
            continue
        lines.append(
            f"{pad}  rule {step.rule.id} (s={step.rule.s}, r={step.rule.r}): "
            f"match (λ={step.match.pos}, ρ={step.match.neg}) -> "
            f"(alpha={step.alpha}, beta={step.beta})"
        )
        for part in step.elementary:
            negation = "not " if part.negated else ""
            lines.append(
                f"{pad}    {part.attribute} is {negation}{part.term} [w={part.weight}]: "
                f"({part.pair.pos}, {part.pair.neg})"
            )
    lines.extend(pad + line for line in render_atoms(tree.group))
    lines.extend(pad + line for line in render_distribution(tree.attribute, tree.distribution))
    return "\n".join(lines)


def render_blame(blame: BlameSet, group: GroupTrace, with_rules: bool = False) -> str:
    subject = blame.element or "{" + ", ".join(blame.atom) + "}"
    head = f"{blame.attribute} = {subject} is possible at the degree {blame.achieved}"
    if blame.vacuous:
        return f"{head}; no constraint binds"
    shown = [c for c in blame.contributors if with_rules or c.kind is not ContributorKind.RULE]
    if not shown:
        return f"{head}, due to the uncertainty of the rules alone"
    reasons = [
        stated_text(blame.attribute, c)
        if c.kind is ContributorKind.STATED
        else contributor_text(group.step(c.rule_id).rule, c)
        for c in shown
    ]
    return f"{head}, mainly because " + " and ".join(reasons)


def render_threshold(explanation: ThresholdExplanation) -> str:
    subject = f"{explanation.attribute} = {explanation.element}"
    extent = "at least" if explanation.bound is Bound.AT_LEAST else "at most"
    head = f"{subject} is possible at the degree {explanation.achieved}"
    stated = f"the fact stated on {explanation.attribute}"
    if explanation.verdict is Verdict.INFEASIBLE and explanation.bound is Bound.AT_LEAST:
        return f"{head}; {stated} allows it at most at the degree {explanation.cap} in any case"
    if explanation.verdict is Verdict.INFEASIBLE:
        return f"{head}; the possibility cannot go below {explanation.floor} in any case"
    capped = explanation.cap is not None and explanation.cap <= explanation.target
    if explanation.verdict is Verdict.SATISFIED and explanation.bound is Bound.AT_MOST and capped:
        return f"{head}; {stated} keeps it at most at {explanation.cap} whatever the other facts"
    if explanation.verdict is Verdict.SATISFIED:
        return f"{head}; it stays {extent} {explanation.target} whatever the facts"
    options = [
        "\n    and ".join(item.text for item in clause) for clause in explanation.clauses
    ]
    lines = [f"{head}; to make it {extent} {explanation.target}:"]
    lines.append("  " + "\n  or\n  ".join(options))
    return "\n".join(lines)


def render_diagnosis(diagnosis: Diagnosis, group: GroupTrace) -> str:
    lines = [
        f"{diagnosis.attribute}: cardinality {diagnosis.cardinality}, "
        f"specificity {diagnosis.specificity}"
    ]
    if diagnosis.ignorance:
        lines.append("  the inputs are totally unknown; no constraint binds any conclusion")
    for entry in diagnosis.uncertain_inputs:
        text = contributor_text(group.step(entry.rule_id).rule, entry)
        plain = f"{entry.label} = {entry.value}"
        shown = text if text == plain else f"{text} ({plain})"
        lines.append(f"  uncertain input: {shown}")
    if diagnosis.conflict is not None:
        conflict = diagnosis.conflict
        lines.append(f"  conflicting conclusions: subnormal at the degree {conflict.subnormality}")
        for left, right in conflict.clashing_rules:
            lines.append(
                f"    rules {left} and {right} agree at most at the degree {conflict.pair_height}"
            )
    if not diagnosis.causes:
        lines.append("  the conclusion is neither uncertain nor conflicting")
    lines.append(f"  note: {diagnosis.note}")
    return "\n".join(lines)


def render_certainty(
    report: CertaintyReport, group: GroupTrace | None, with_rules: bool = False
) -> str:
    lines = [
        f"{report.attribute} = {report.element}: possible at {report.possibility}, "
        f"certain at {report.necessity}"
    ]
    if report.necessity == ONE:
        return lines[0]
    lines.append("  it is not more certain because these remain possible:")
    for competitor in report.competitors:
        members = ", ".join(competitor.members)
        lines.append(f"    {members} at {competitor.degree}")
        if competitor.blame is not None and group is not None:
            lines.append("      " + render_blame(competitor.blame, group, with_rules))
    return "\n".join(lines)


def render_surprise(report: SurpriseReport) -> str:
    expected = ", ".join(
        label if degree == ONE else f"{label}={degree}"
        for label, degree in report.belief.items()
        if degree
    )
    return (
        f"{report.attribute}: expected {{{expected}}}; compatibility {report.consistency}, "
        f"surprise {report.surprise}"
    )


def render_sensitivity(report: SensitivityReport) -> str:
    curve = report.curve
    label = f"{report.side.symbol}_{report.rule_id}"
    subject = f"{report.attribute} = {report.element}"
    note = []
    if report.cap is not None and report.cap == curve.ceiling:
        note.append(f"  capped at {report.cap} by the fact stated on {report.attribute}")
    if curve.is_constant:
        return "\n".join([f"{subject} stays at {curve.ceiling} whatever {label} is", *note])
    lines = [f"{subject} = min(max({label}, {curve.floor}), {curve.ceiling})"]
    for piece in curve.pieces:
        value = label if piece.constant is None else str(piece.constant)
        lines.append(f"  {label} in [{piece.start}, {piece.end}]: {value}")
    lines.append(f"  now {label} = {curve.current_input} gives {curve.current_output}")
    lines.extend(note)
    return "\n".join(lines)
