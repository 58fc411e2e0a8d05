"""Conjunctive combination of a rule group over the atoms of its conclusion sets."""

from __future__ import annotations

from collections.abc import Sequence

from ..errors import ConclusionMismatchError, EmptyRuleGroupError, NotCrispError
from ..models.degree import ONE
from ..models.fuzzy import PossibilityDistribution
from ..models.matching import MatchPair
from ..models.rules import UncertainRule
from ..models.system import Atom, Column, InputVector, OutputVector, RuleMatrix, Side
from .propagation import propagate


def _check_group(rules: Sequence[UncertainRule]) -> None:
    if not rules:
        raise EmptyRuleGroupError("a rule group needs at least one rule")
    first = rules[0]
    for rule in rules:
        if not rule.is_crisp:
            raise NotCrispError(
                f"rule {rule.id!r} has a fuzzy conclusion; decompose it before combining"
            )
        if (
            rule.conclusion_attribute != first.conclusion_attribute
            or rule.conclusion.domain != first.conclusion.domain
        ):
            raise ConclusionMismatchError(
                f"rules {first.id!r} and {rule.id!r} conclude on different attributes"
            )


def build_atoms(rules: Sequence[UncertainRule]) -> tuple[Atom, ...]:
    """Partition the conclusion domain by membership in each E_i.

    Empty intersections are dropped; atoms are ordered by their first member
    in domain order.
    """
    _check_group(rules)
    domain = rules[0].conclusion.domain
    grouped: dict[tuple[bool, ...], list[str]] = {}
    for index, label in enumerate(domain):
        signature = tuple(rule.conclusion.mu[index] == ONE for rule in rules)
        grouped.setdefault(signature, []).append(label)
    return tuple(Atom(signature=sig, members=tuple(members)) for sig, members in grouped.items())


def combine_group(
    rules: Sequence[UncertainRule], iv: InputVector
) -> tuple[tuple[Atom, ...], OutputVector, PossibilityDistribution]:
    """x_A = min over rules of (alpha_i if A is inside E_i else beta_i), over the domain."""
    atoms = build_atoms(rules)
    if len(iv.pairs) != len(rules):
        raise ValueError(f"{len(iv.pairs)} input pairs for {len(rules)} rules")
    propagated = [propagate(rule, pair) for rule, pair in zip(rules, iv.pairs)]
    degrees = tuple(
        min(alpha if inside else beta for inside, (alpha, beta) in zip(atom.signature, propagated))
        for atom in atoms
    )
    output = OutputVector(atoms=atoms, degrees=degrees)
    return atoms, output, output.expand(rules[0].conclusion.domain)


def build_rule_matrix(rules: Sequence[UncertainRule], atoms: Sequence[Atom]) -> RuleMatrix:
    """Row for atom A holds (s_i, 1) where A is inside E_i and (1, r_i) where it is outside."""
    columns = tuple(
        Column(rule_id=rule.id, side=side) for rule in rules for side in (Side.LAMBDA, Side.RHO)
    )
    rows = []
    for atom in atoms:
        if len(atom.signature) != len(rules):
            raise ValueError("atom signature does not match the rule group")
        row = []
        for rule, inside in zip(rules, atom.signature):
            row.extend((rule.s, ONE) if inside else (ONE, rule.r))
        rows.append(tuple(row))
    return RuleMatrix(columns=columns, rows=tuple(rows))


def input_vector(rules: Sequence[UncertainRule], pairs: Sequence[MatchPair]) -> InputVector:
    return InputVector(rule_ids=tuple(rule.id for rule in rules), pairs=tuple(pairs))
