"""One-input sensitivity curves of a single row of a min-max system."""

from __future__ import annotations

from collections.abc import Sequence

from ..errors import DimensionMismatchError
from ..models.degree import ONE, Degree
from ..models.system import SensitivityCurve
from .minmax import Matrix, eval_minmax


def sensitivity_curve(
    matrix: Matrix, v: Sequence[Degree], k: int, j: int | Sequence[int]
) -> SensitivityCurve:
    """Row k as a function of v_j alone: f(x) = min(max(M_kj, x), c).

    ``c`` is the min over the other columns of max(M_kj', v_j'), the value the
    row would take if column j were irrelevant. Several columns may be given;
    they are all set to x together and the floor is the least of their entries.
    """
    columns = (j,) if isinstance(j, int) else tuple(j)
    b = eval_minmax(matrix, v)
    if not 0 <= k < len(matrix):
        raise DimensionMismatchError(f"row {k} is outside a {len(matrix)}-row matrix")
    if not columns:
        raise DimensionMismatchError("no column to vary")
    for column in columns:
        if not 0 <= column < len(v):
            raise DimensionMismatchError(f"column {column} is outside a {len(v)}-column matrix")
    row = matrix[k]
    ceiling = min((max(row[i], v[i]) for i in range(len(v)) if i not in columns), default=ONE)
    return SensitivityCurve(
        row=k,
        columns=columns,
        floor=min(row[i] for i in columns),
        ceiling=ceiling,
        current_input=v[columns[0]],
        current_output=b[k],
    )
