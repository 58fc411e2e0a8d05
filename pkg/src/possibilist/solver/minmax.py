"""Evaluation and exact solving of min-max systems b = M ■ v."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from itertools import product

from ..errors import DimensionMismatchError
from ..models.degree import ONE, ZERO, Degree
from ..models.system import MinMaxSystem, SolveResult

logger = logging.getLogger(__name__)

Matrix = Sequence[Sequence[Degree]]
Coupling = Sequence[tuple[int, int]]


def _width(matrix: Matrix) -> int:
    widths = {len(row) for row in matrix}
    if len(widths) > 1:
        raise DimensionMismatchError("matrix rows have different lengths")
    return widths.pop() if widths else 0


def eval_minmax(matrix: Matrix, v: Sequence[Degree]) -> tuple[Degree, ...]:
    """b_i = min over j of max(M_ij, v_j)."""
    if matrix and _width(matrix) != len(v):
        raise DimensionMismatchError(
            f"matrix has {_width(matrix)} columns, vector has {len(v)} entries"
        )
    return tuple(min(map(max, row, v), default=ONE) for row in matrix)


def respects_coupling(v: Sequence[Degree], coupling: Coupling) -> bool:
    return all(max(v[j], v[k]) == ONE for j, k in coupling)


def _minimal(vectors: list[tuple[Degree, ...]]) -> list[tuple[Degree, ...]]:
    unique = list(dict.fromkeys(vectors))
    return [
        v
        for v in unique
        if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in unique)
    ]


def _maximal(vectors: list[tuple[Degree, ...]]) -> list[tuple[Degree, ...]]:
    unique = list(dict.fromkeys(vectors))
    return [
        v
        for v in unique
        if not any(w != v and all(a >= b for a, b in zip(w, v)) for w in unique)
    ]


def solve_exact(
    matrix: Matrix,
    b: Sequence[Degree],
    coupling: Coupling = (),
    limit: int = 256,
) -> SolveResult:
    """Solve M ■ v = b for v, optionally under max(v_j, v_k) = 1 for coupled columns.

    Every term of row i must reach b_i, so v_j >= b_i wherever M_ij < b_i; the
    pointwise least such vector is a solution exactly when the system is
    solvable. Each row also needs one attaining column with M_ij <= b_i and
    v_j <= b_i, which bounds the solutions from above. Maximal solutions are
    enumerated only when at most ``limit`` row assignments exist.
    """
    width = _width(matrix)
    if len(b) != len(matrix):
        raise DimensionMismatchError(f"{len(matrix)} rows but {len(b)} observed degrees")
    system = MinMaxSystem(
        matrix=tuple(tuple(row) for row in matrix),
        observed=tuple(Degree.of(x) for x in b),
        coupling=tuple(tuple(pair) for pair in coupling),
    )
    matrix, b, coupling = system.matrix, system.observed, system.coupling

    lower = tuple(
        max((bi for row, bi in zip(matrix, b) if row[j] < bi), default=ZERO) for j in range(width)
    )
    if eval_minmax(matrix, lower) != b:
        return SolveResult(solvable=False, lower=lower)

    candidates = []
    for raised in product(*coupling):
        w = list(lower)
        for j in raised:
            w[j] = ONE
        w = tuple(w)
        if eval_minmax(matrix, w) == b:
            candidates.append(w)
    if not candidates:
        return SolveResult(solvable=False, lower=lower)

    minimal = _minimal(candidates)
    meet = tuple(min(column) for column in zip(*minimal)) if width else ()
    least = meet if respects_coupling(meet, coupling) and eval_minmax(matrix, meet) == b else None

    row_options = tuple(
        tuple(j for j in range(width) if row[j] <= bi and lower[j] <= bi)
        for row, bi in zip(matrix, b)
    )
    maximal = None
    if math.prod(len(options) for options in row_options) <= limit:
        uppers = []
        for assignment in product(*row_options):
            upper = [ONE] * width
            for bi, j in zip(b, assignment):
                upper[j] = min(upper[j], bi)
            upper = tuple(upper)
            if respects_coupling(upper, coupling):
                uppers.append(upper)
        maximal = tuple(_maximal(uppers))
    else:
        logger.info(
            "solution set described by row options; %s assignments exceed %d", row_options, limit
        )

    return SolveResult(
        solvable=True,
        lower=lower,
        least=least,
        minimal=tuple(minimal),
        maximal=maximal,
        row_options=row_options,
    )
