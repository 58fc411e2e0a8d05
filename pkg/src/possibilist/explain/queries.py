"""Positive and negative explanations, imprecision diagnosis and sensitivity queries."""

from __future__ import annotations

import logging
from decimal import Decimal
from itertools import combinations

from ..core import cardinality, min_combine, specificity
from ..errors import UnknownRuleError
from ..models.consultation import Consultation, GroupTrace
from ..models.degree import ONE, ZERO, Degree
from ..models.explanation import (
    BlameEntry,
    Cause,
    Conflict,
    ContributorKind,
    Diagnosis,
    RenderedConstraint,
    SensitivityReport,
    ThresholdExplanation,
    Verdict,
)
from ..models.system import Bound, Side, ThresholdConstraint
from ..solver import (
    apply_coupling,
    require_at_least,
    require_at_most,
    sensitivity_curve,
)
from .blame import locate, row_blame, stated_cap
from .render import constraint_text, symbolic

logger = logging.getLogger(__name__)

_THOUSANDTH = Decimal("0.001")


def _rendered(
    group: GroupTrace, constraint: ThresholdConstraint
) -> tuple[tuple[RenderedConstraint, ...], ...]:
    columns = group.matrix.columns
    clauses = []
    for clause in constraint.clauses:
        items = []
        for atom in clause:
            column = columns[atom.column]
            rule = group.step(column.rule_id).rule
            items.append(
                RenderedConstraint(
                    rule_id=column.rule_id,
                    side=column.side,
                    bound=atom.bound,
                    threshold=atom.threshold,
                    symbolic=symbolic(column.rule_id, column.side, atom.bound, atom.threshold),
                    text=constraint_text(rule, column.side, atom.bound, atom.threshold),
                )
            )
        clauses.append(tuple(items))
    return tuple(clauses)


def _threshold_explanation(
    consultation: Consultation, attribute: str, element: str, t: Degree, bound: Bound
) -> ThresholdExplanation:
    t = Degree.of(t)
    group, k = locate(consultation, attribute, element)
    cap = stated_cap(group, element)
    rows = group.matrix.rows
    iv = group.input_vector
    if bound is Bound.AT_LEAST and cap is not None and cap < t:
        constraint = ThresholdConstraint.never()
    elif bound is Bound.AT_MOST and cap is not None and cap <= t:
        constraint = ThresholdConstraint.always()
    else:
        query = require_at_least if bound is Bound.AT_LEAST else require_at_most
        constraint = apply_coupling(query(rows, k, t), iv.coupling)
    achieved = group.distribution[element]

    if constraint.is_infeasible:
        verdict = Verdict.INFEASIBLE
    elif constraint.is_trivial:
        verdict = Verdict.SATISFIED
    else:
        verdict = Verdict.CONSTRAINED
    logger.debug("%s %s %s: %s", element, bound.value, t, verdict.value)
    return ThresholdExplanation(
        attribute=attribute,
        element=element,
        atom=group.output.atoms[k].members,
        bound=bound,
        target=t,
        achieved=achieved,
        verdict=verdict,
        constraint=constraint,
        clauses=_rendered(group, constraint),
        floor=constraint.floor,
        currently_met=achieved >= t if bound is Bound.AT_LEAST else achieved <= t,
        cap=cap,
    )


def explain_positive(
    consultation: Consultation, attribute: str, element: str, t: Degree
) -> ThresholdExplanation:
    """What the inputs must be for ``element`` to be possible at least at degree ``t``."""
    return _threshold_explanation(consultation, attribute, element, t, Bound.AT_LEAST)


def explain_negative(
    consultation: Consultation, attribute: str, element: str, t: Degree
) -> ThresholdExplanation:
    """Why ``element`` is (or cannot be) possible at most at degree ``t``."""
    return _threshold_explanation(consultation, attribute, element, t, Bound.AT_MOST)


def _conflict(group: GroupTrace) -> Conflict | None:
    distribution = group.distribution
    if distribution.is_normalized:
        return None
    heights = {
        (a.rule.id, b.rule.id): min_combine(a.induced, b.induced).height
        for a, b in combinations(group.steps, 2)
    }
    lowest = min(heights.values(), default=ONE)
    clashing = tuple(pair for pair, h in heights.items() if h == lowest) if lowest < ONE else ()
    return Conflict(
        subnormality=distribution.subnormality,
        clashing_rules=clashing,
        pair_height=lowest if clashing else None,
    )


def diagnose_imprecision(consultation: Consultation, attribute: str) -> Diagnosis:
    """Classify why the conclusion on ``attribute`` is uncertain, imprecise or conflicting.

    Input uncertainty shows up as competing atoms held up by fact-side degrees
    strictly between 0 and 1; conflict shows up as a subnormal result.
    """
    group = consultation.group(attribute)
    distribution = group.distribution
    blames = tuple(row_blame(group, k) for k in range(len(group.output.atoms)))
    top = max(group.output.degrees)

    uncertain: dict[tuple[str, Side], BlameEntry] = {}
    for blame, degree in zip(blames, group.output.degrees):
        if degree == top or degree == ZERO or blame.rules:
            continue
        for entry in blame.facts:
            if ZERO < entry.value < ONE:
                uncertain.setdefault((entry.rule_id, entry.side), entry)

    ignorance = distribution.is_ignorance
    conflict = _conflict(group)
    causes = []
    if uncertain or ignorance:
        causes.append(Cause.INPUT_UNCERTAINTY)
    if conflict is not None:
        causes.append(Cause.CONFLICT)

    size = cardinality(distribution.as_subset())
    ratio = specificity(distribution)
    return Diagnosis(
        attribute=attribute,
        distribution=distribution,
        causes=tuple(causes),
        uncertain_inputs=tuple(sorted(uncertain.values(), key=lambda e: (e.rule_id, e.side.value))),
        blames=blames,
        ignorance=ignorance,
        conflict=conflict,
        cardinality=Decimal(size.numerator) / Decimal(size.denominator),
        specificity=(Decimal(ratio.numerator) / Decimal(ratio.denominator)).quantize(_THOUSANDTH),
    )


def _flipped(side: Side) -> Side:
    return Side.RHO if side is Side.LAMBDA else Side.LAMBDA


def rule_columns(group: GroupTrace, rule_id: str, side: Side) -> tuple[int, ...]:
    """Columns of ``group`` holding ``side`` of the rule written as ``rule_id``.

    A split fuzzy conclusion answers for every one of its pieces. The second
    rule of a folded pair has the complementary condition, so its sides swap.
    """
    matrix = group.matrix
    if rule_id in group.rule_ids:
        return (matrix.column_index(rule_id, side),)
    columns = tuple(
        matrix.column_index(
            step.rule.id, side if step.rule.source_ids[0] == rule_id else _flipped(side)
        )
        for step in group.steps
        if rule_id in step.rule.source_ids
    )
    if not columns:
        known = ", ".join(group.rule_ids)
        raise UnknownRuleError(f"no rule {rule_id!r} concludes on {group.attribute!r} ({known})")
    return columns


def sensitivity(
    consultation: Consultation, attribute: str, element: str, rule_id: str, side: Side
) -> SensitivityReport:
    """Degree of ``element`` as a function of one input of one rule, others held fixed."""
    group, k = locate(consultation, attribute, element)
    columns = rule_columns(group, rule_id, side)
    curve = sensitivity_curve(group.matrix.rows, group.input_vector.flatten(), k, columns)
    cap = stated_cap(group, element)
    if cap is not None and cap < curve.ceiling:
        curve = curve.model_copy(
            update={"ceiling": cap, "current_output": min(curve.current_output, cap)}
        )
    return SensitivityReport(
        attribute=attribute,
        element=element,
        atom=group.output.atoms[k].members,
        rule_id=rule_id,
        side=side,
        curve=curve,
        cap=cap,
    )
