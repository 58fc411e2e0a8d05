"""Exhaustive search over a degree grid, the reference the exact solver is checked against."""

from __future__ import annotations

from collections.abc import Sequence
from itertools import product

from ..models.degree import SCALE, Degree, degree_grid
from .minmax import Coupling, Matrix


def grid_search(
    matrix: Matrix,
    b: Sequence[Degree],
    coupling: Coupling = (),
    levels: int = 11,
) -> list[tuple[Degree, ...]]:
    """Every grid vector v with M ■ v = b that respects the coupling, in lexicographic order.

    Exact for grid-valued M and b: each solution component can be moved to
    the grid without changing any row.
    """
    width = len(matrix[0]) if matrix else 0
    rows = [tuple(int(x) for x in row) for row in matrix]
    target = [int(x) for x in b]
    grid = [int(x) for x in degree_grid(levels)]
    found = []
    for v in product(grid, repeat=width):
        if any(max(v[j], v[k]) != SCALE for j, k in coupling):
            continue
        if all(min(map(max, row, v)) == bi for row, bi in zip(rows, target)):
            found.append(tuple(Degree(x) for x in v))
    return found


def least_of(solutions: Sequence[tuple[Degree, ...]]) -> tuple[Degree, ...] | None:
    """The pointwise least solution if one of them lies below all others."""
    if not solutions:
        return None
    meet = tuple(min(column) for column in zip(*solutions))
    return meet if meet in solutions else None
