"""Threshold queries on one row of a min-max system."""

from __future__ import annotations

from collections.abc import Sequence

from ..errors import DimensionMismatchError
from ..models.degree import ONE, Degree
from ..models.system import AtomicConstraint, Bound, ThresholdConstraint
from .minmax import Coupling, Matrix


def _row(matrix: Matrix, k: int) -> Sequence[Degree]:
    if not 0 <= k < len(matrix):
        raise DimensionMismatchError(f"row {k} is outside a {len(matrix)}-row matrix")
    return matrix[k]


def require_at_least(matrix: Matrix, k: int, t: Degree) -> ThresholdConstraint:
    """b_k >= t holds exactly when v_j >= t for every column with M_kj < t.

    The result is a single conjunction; an empty one means the rule
    uncertainties alone guarantee the degree.
    """
    t = Degree.of(t)
    clause = tuple(
        AtomicConstraint(column=j, bound=Bound.AT_LEAST, threshold=t)
        for j, entry in enumerate(_row(matrix, k))
        if entry < t
    )
    return ThresholdConstraint(clauses=(clause,))


def require_at_most(matrix: Matrix, k: int, t: Degree) -> ThresholdConstraint:
    """b_k <= t holds exactly when some column has M_kj <= t and v_j <= t.

    When no entry of the row is that low the target is infeasible and the
    result carries the row floor, the least value b_k can ever take.
    """
    t = Degree.of(t)
    row = _row(matrix, k)
    if t == ONE:
        return ThresholdConstraint.always()
    clauses = tuple(
        (AtomicConstraint(column=j, bound=Bound.AT_MOST, threshold=t),)
        for j, entry in enumerate(row)
        if entry <= t
    )
    if not clauses:
        return ThresholdConstraint.never(floor=min(row, default=ONE))
    return ThresholdConstraint(clauses=clauses)


def apply_coupling(constraint: ThresholdConstraint, coupling: Coupling) -> ThresholdConstraint:
    """Drop clauses that would force both members of a coupled pair below 1."""
    kept = []
    for clause in constraint.clauses:
        capped = {
            atom.column
            for atom in clause
            if atom.bound is Bound.AT_MOST and atom.threshold < ONE
        }
        if any(j in capped and k in capped for j, k in coupling):
            continue
        kept.append(clause)
    if constraint.clauses and not kept:
        return ThresholdConstraint.never(floor=constraint.floor)
    return ThresholdConstraint(clauses=tuple(kept), floor=constraint.floor)
