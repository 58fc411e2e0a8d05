"""Min-max systems: atoms, rule matrices, input/output vectors and threshold constraints."""

from __future__ import annotations

from collections.abc import Sequence
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .degree import ONE, ZERO, Degree
from .fuzzy import Domain, PossibilityDistribution
from .matching import MatchPair


class Side(str, Enum):
    """Which component of a rule's input pair a matrix column reads."""

    LAMBDA = "lambda"
    RHO = "rho"

    @property
    def symbol(self) -> str:
        return "λ" if self is Side.LAMBDA else "ρ"


class Column(BaseModel):
    model_config = ConfigDict(frozen=True)

    rule_id: str
    side: Side

    @property
    def label(self) -> str:
        return f"{self.side.symbol}_{self.rule_id}"


class Atom(BaseModel):
    """A nonempty intersection of rule conclusion sets and their complements."""

    model_config = ConfigDict(frozen=True)

    signature: tuple[bool, ...] = Field(..., description="per rule: True when inside E_i")
    members: tuple[str, ...] = Field(..., min_length=1)

    def describe(self, rule_ids: Sequence[str]) -> str:
        return " ∩ ".join(
            f"E_{rule_id}" if inside else f"¬E_{rule_id}"
            for rule_id, inside in zip(rule_ids, self.signature)
        )


class InputVector(BaseModel):
    """Per rule, the (lambda, rho) match pair of its whole condition."""

    model_config = ConfigDict(frozen=True)

    rule_ids: tuple[str, ...]
    pairs: tuple[MatchPair, ...]

    @model_validator(mode="after")
    def _aligned(self) -> InputVector:
        if len(self.rule_ids) != len(self.pairs):
            raise ValueError("one match pair per rule is required")
        return self

    @property
    def is_normalized(self) -> bool:
        return all(pair.is_normalized for pair in self.pairs)

    def flatten(self) -> tuple[Degree, ...]:
        return tuple(d for pair in self.pairs for d in (pair.pos, pair.neg))

    @property
    def columns(self) -> tuple[Column, ...]:
        return tuple(
            Column(rule_id=rule_id, side=side) for rule_id in self.rule_ids for side in Side
        )

    @property
    def coupling(self) -> tuple[tuple[int, int], ...]:
        return tuple((2 * i, 2 * i + 1) for i in range(len(self.pairs)))


class RuleMatrix(BaseModel):
    """One row per atom, a (lambda, rho) column pair per rule; entries are s_i, r_i or 1."""

    model_config = ConfigDict(frozen=True)

    columns: tuple[Column, ...]
    rows: tuple[tuple[Degree, ...], ...]

    @model_validator(mode="after")
    def _rectangular(self) -> RuleMatrix:
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("every matrix row needs one entry per column")
        return self

    def column_index(self, rule_id: str, side: Side) -> int:
        return self.columns.index(Column(rule_id=rule_id, side=side))


class OutputVector(BaseModel):
    """One possibility degree per atom."""

    model_config = ConfigDict(frozen=True)

    atoms: tuple[Atom, ...]
    degrees: tuple[Degree, ...]

    @model_validator(mode="after")
    def _aligned(self) -> OutputVector:
        if len(self.atoms) != len(self.degrees):
            raise ValueError("one degree per atom is required")
        return self

    def atom_of(self, element: str) -> int:
        for index, atom in enumerate(self.atoms):
            if element in atom.members:
                return index
        raise KeyError(element)

    def expand(self, domain: Domain) -> PossibilityDistribution:
        """Assign each atom's degree to each of its members."""
        grades = {
            member: degree
            for atom, degree in zip(self.atoms, self.degrees)
            for member in atom.members
        }
        return PossibilityDistribution(domain=domain, pi=tuple(grades[label] for label in domain))


class Bound(str, Enum):
    AT_LEAST = ">="
    AT_MOST = "<="


class AtomicConstraint(BaseModel):
    """``v_j >= t`` or ``v_j <= t`` on one unknown of a min-max system."""

    model_config = ConfigDict(frozen=True)

    column: int
    bound: Bound
    threshold: Degree

    def satisfied_by(self, v: Sequence[int]) -> bool:
        if self.bound is Bound.AT_LEAST:
            return v[self.column] >= self.threshold
        return v[self.column] <= self.threshold


class ThresholdConstraint(BaseModel):
    """A disjunction of conjunctions of atomic constraints.

    No clause at all is unsatisfiable; a single empty clause always holds.
    ``floor`` records the lowest reachable degree when an upper target is infeasible.
    """

    model_config = ConfigDict(frozen=True)

    clauses: tuple[tuple[AtomicConstraint, ...], ...]
    floor: Degree | None = None

    @classmethod
    def always(cls) -> ThresholdConstraint:
        return cls(clauses=((),))

    @classmethod
    def never(cls, floor: Degree | None = None) -> ThresholdConstraint:
        return cls(clauses=(), floor=floor)

    @property
    def is_trivial(self) -> bool:
        return any(not clause for clause in self.clauses)

    @property
    def is_infeasible(self) -> bool:
        return not self.clauses

    def satisfied_by(self, v: Sequence[int]) -> bool:
        return any(all(atom.satisfied_by(v) for atom in clause) for clause in self.clauses)


class MinMaxSystem(BaseModel):
    """``b = M ■ v`` with optional normalization coupling max(v_j, v_j') = 1."""

    model_config = ConfigDict(frozen=True)

    matrix: tuple[tuple[Degree, ...], ...]
    observed: tuple[Degree, ...] | None = None
    coupling: tuple[tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _disjoint_coupling(self) -> MinMaxSystem:
        seen: set[int] = set()
        width = len(self.matrix[0]) if self.matrix else 0
        for pair in self.coupling:
            if seen & set(pair) or pair[0] == pair[1]:
                raise ValueError("coupling pairs must be disjoint")
            if not all(0 <= j < width for j in pair):
                raise ValueError("coupling refers to a missing column")
            seen.update(pair)
        return self


class SolveResult(BaseModel):
    """Outcome of solving ``M ■ v = b`` exactly.

    When solvable, every solution v satisfies ``lower <= v`` and, for every
    row i, some column j in ``row_options[i]`` has ``v_j <= b_i``; together
    with the coupling this describes the solution set losslessly.
    """

    model_config = ConfigDict(frozen=True)

    solvable: bool
    lower: tuple[Degree, ...] | None = None
    least: tuple[Degree, ...] | None = None
    minimal: tuple[tuple[Degree, ...], ...] = ()
    maximal: tuple[tuple[Degree, ...], ...] | None = None
    row_options: tuple[tuple[int, ...], ...] = ()


class Piece(BaseModel):
    model_config = ConfigDict(frozen=True)

    start: Degree
    end: Degree
    constant: Degree | None = Field(default=None, description="None means f(x) = x on the piece")


class SensitivityCurve(BaseModel):
    """``f(x) = min(max(floor, x), ceiling)``: row value as one input varies."""

    model_config = ConfigDict(frozen=True)

    row: int
    columns: tuple[int, ...]
    floor: Degree
    ceiling: Degree
    current_input: Degree
    current_output: Degree

    def __call__(self, x: Degree) -> Degree:
        return min(max(self.floor, x), self.ceiling)

    @property
    def is_constant(self) -> bool:
        return self.floor >= self.ceiling

    @property
    def breakpoints(self) -> tuple[Degree, ...]:
        """Interior points where the slope changes."""
        if self.is_constant:
            return ()
        points = []
        if self.floor > ZERO:
            points.append(self.floor)
        if self.ceiling < ONE:
            points.append(self.ceiling)
        return tuple(points)

    @property
    def pieces(self) -> tuple[Piece, ...]:
        if self.is_constant:
            return (Piece(start=ZERO, end=ONE, constant=self.ceiling),)
        pieces = []
        if self.floor > ZERO:
            pieces.append(Piece(start=ZERO, end=self.floor, constant=self.floor))
        pieces.append(Piece(start=self.floor, end=self.ceiling))
        if self.ceiling < ONE:
            pieces.append(Piece(start=self.ceiling, end=ONE, constant=self.ceiling))
        return tuple(pieces)
