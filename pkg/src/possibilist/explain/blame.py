"""Blame sets, surprise and certainty: what mainly determines a conclusion."""

from __future__ import annotations

from ..core import consistency, necessity
from ..errors import NotDerivedError
from ..models.consultation import Consultation, GroupTrace
from ..models.degree import ONE, ZERO, Degree
from ..models.explanation import (
    BlameEntry,
    BlameSet,
    CertaintyReport,
    Competitor,
    ContributorKind,
    SurpriseReport,
)
from ..models.fuzzy import FuzzySubset, PossibilityDistribution
from ..models.rules import BeliefModel
from ..models.system import Side


def locate(consultation: Consultation, attribute: str, element: str) -> tuple[GroupTrace, int]:
    """The rule group concluding on ``attribute`` and the atom row holding ``element``."""
    group = consultation.group(attribute)
    group.domain.index(element)
    return group, group.output.atom_of(element)


def stated_cap(group: GroupTrace, element: str | None) -> Degree | None:
    """The degree a fact stated on the derived attribute itself allows ``element``."""
    if element is None or group.stated_fact is None:
        return None
    return group.stated_fact[element]


def row_blame(
    group: GroupTrace, k: int, element: str | None = None, cap: Degree | None = None
) -> BlameSet:
    """All terms max(M_kj, v_j) of row ``k`` that attain the row minimum.

    A binding term is put on the fact when v_j >= M_kj and on the rule's own
    uncertainty when M_kj >= v_j, so ties are reported on both sides. A fact
    stated on the derived attribute is one more min term (``cap``, looked up
    for ``element`` when not given).
    """
    if cap is None:
        cap = stated_cap(group, element)
    row = group.matrix.rows[k]
    v = group.input_vector.flatten()
    terms = [max(entry, value) for entry, value in zip(row, v)]
    computed = min(terms, default=ONE)
    achieved = computed if cap is None else min(computed, cap)
    atom = group.output.atoms[k].members
    if achieved == ONE:
        return BlameSet(
            attribute=group.attribute, element=element, atom=atom, achieved=achieved, vacuous=True
        )

    contributors = []
    if cap == achieved:
        contributors.append(BlameEntry(kind=ContributorKind.STATED, value=cap))
    for column, entry, value, term in zip(group.matrix.columns, row, v, terms):
        if term != achieved:
            continue
        if value >= entry:
            contributors.append(
                BlameEntry(
                    rule_id=column.rule_id, side=column.side, kind=ContributorKind.FACT, value=value
                )
            )
        if entry >= value:
            contributors.append(
                BlameEntry(
                    rule_id=column.rule_id,
                    side=column.side,
                    kind=ContributorKind.RULE,
                    value=entry,
                    parameter="s" if column.side is Side.LAMBDA else "r",
                )
            )
    return BlameSet(
        attribute=group.attribute,
        element=element,
        atom=atom,
        achieved=achieved,
        contributors=tuple(contributors),
    )


def explain_mainly(consultation: Consultation, attribute: str, element: str) -> BlameSet:
    group, k = locate(consultation, attribute, element)
    return row_blame(group, k, element)


def surprise_degree(conclusion: PossibilityDistribution, belief: FuzzySubset) -> Degree:
    """Incompatibility between the obtained conclusion and what the user expected."""
    return consistency(belief, conclusion).complement()


def surprise(consultation: Consultation, attribute: str, beliefs: BeliefModel) -> SurpriseReport:
    conclusion = consultation.distribution(attribute)
    try:
        belief = beliefs.beliefs[attribute]
    except KeyError:
        belief = FuzzySubset.full(conclusion.domain)
    compatibility = consistency(belief, conclusion)
    return SurpriseReport(
        attribute=attribute,
        belief=belief,
        consistency=compatibility,
        surprise=compatibility.complement(),
    )


def certainty_view(consultation: Consultation, attribute: str, element: str) -> CertaintyReport:
    """Necessity of ``element``, with the elements whose possibility keeps it from being higher."""
    distribution = consultation.distribution(attribute)
    domain = distribution.domain
    domain.index(element)
    certainty = necessity(distribution, FuzzySubset.crisp(domain, [element]))

    try:
        group = consultation.group(attribute)
    except NotDerivedError:
        group = None

    # The strongest competitor sits at exactly 1 - N, which is not above N once N >= 0.5.
    strongest = certainty.complement()

    def competes(label: str) -> bool:
        degree = distribution[label]
        return label != element and degree > ZERO and (degree > certainty or degree == strongest)

    competitors = []
    if group is None:
        for label, degree in distribution.items():
            if competes(label):
                competitors.append(Competitor(members=(label,), degree=degree))
    else:
        for k, atom in enumerate(group.output.atoms):
            by_degree: dict[tuple[Degree, Degree | None], list[str]] = {}
            for label in atom.members:
                if competes(label):
                    key = (distribution[label], stated_cap(group, label))
                    by_degree.setdefault(key, []).append(label)
            for (degree, cap), members in by_degree.items():
                competitors.append(
                    Competitor(
                        members=tuple(members), degree=degree, blame=row_blame(group, k, cap=cap)
                    )
                )

    return CertaintyReport(
        attribute=attribute,
        element=element,
        possibility=distribution[element],
        necessity=certainty,
        competitors=tuple(competitors),
    )
