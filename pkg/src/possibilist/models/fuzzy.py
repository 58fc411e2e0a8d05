"""Finite domains, fuzzy subsets and possibility distributions."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import UnknownElementError
from .degree import ONE, ZERO, Degree

CATCH_ALL = "others"


class Domain(BaseModel):
    """A closed, ordered set of labels an attribute ranges over."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    elements: tuple[str, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _unique_labels(self) -> Domain:
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"domain {self.name!r} has duplicate labels")
        return self

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:  # type: ignore[override]
        return iter(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self.elements

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            message = f"{label!r} is not an element of domain {self.name!r}"
            raise UnknownElementError(message) from None

    @property
    def has_catch_all(self) -> bool:
        return CATCH_ALL in self.elements

    def with_catch_all(self) -> Domain:
        """The open-world version of this domain, with the implicit catch-all element."""
        if self.has_catch_all:
            return self
        return Domain(name=self.name, elements=(*self.elements, CATCH_ALL))


class _Graded(BaseModel):
    """Shared behaviour of degree vectors over a domain."""

    model_config = ConfigDict(frozen=True)

    domain: Domain

    @property
    def degrees(self) -> tuple[Degree, ...]:
        raise NotImplementedError

    def _check_length(self, values: tuple[Degree, ...]) -> None:
        if len(values) != len(self.domain):
            raise ValueError(
                f"{len(values)} degrees given for the {len(self.domain)} elements "
                f"of domain {self.domain.name!r}"
            )

    def __getitem__(self, label: str) -> Degree:
        return self.degrees[self.domain.index(label)]

    def items(self) -> Iterator[tuple[str, Degree]]:
        return zip(self.domain.elements, self.degrees)

    @property
    def height(self) -> Degree:
        return max(self.degrees)

    def as_mapping(self) -> dict[str, Degree]:
        return dict(self.items())


class FuzzySubset(_Graded):
    """Membership degrees ``mu`` over a domain."""

    mu: tuple[Degree, ...]

    @model_validator(mode="after")
    def _length(self) -> FuzzySubset:
        self._check_length(self.mu)
        return self

    @property
    def degrees(self) -> tuple[Degree, ...]:
        return self.mu

    @property
    def is_crisp(self) -> bool:
        return all(m in (ZERO, ONE) for m in self.mu)

    @property
    def is_normalized(self) -> bool:
        return self.height == ONE

    @property
    def members(self) -> tuple[str, ...]:
        """Elements with membership 1 (the core; the whole set when crisp)."""
        return tuple(label for label, m in self.items() if m == ONE)

    def levels(self) -> tuple[Degree, ...]:
        """Distinct positive membership levels, highest first."""
        return tuple(sorted({m for m in self.mu if m > ZERO}, reverse=True))

    def alpha_cut(self, level: Degree) -> FuzzySubset:
        mu = tuple(ONE if m >= level else ZERO for m in self.mu)
        return FuzzySubset(domain=self.domain, mu=mu)

    def as_distribution(self) -> PossibilityDistribution:
        return PossibilityDistribution(domain=self.domain, pi=self.mu)

    def restrict_to(self, domain: Domain) -> FuzzySubset:
        """Re-express over ``domain``; labels absent from this subset get membership 0."""
        mapping = self.as_mapping()
        return FuzzySubset(domain=domain, mu=tuple(mapping.get(label, ZERO) for label in domain))

    @classmethod
    def crisp(cls, domain: Domain, members: Iterable[str]) -> FuzzySubset:
        chosen = set(members)
        for label in chosen:
            domain.index(label)
        return cls(domain=domain, mu=tuple(ONE if label in chosen else ZERO for label in domain))

    @classmethod
    def from_mapping(cls, domain: Domain, grades: Mapping[str, Degree]) -> FuzzySubset:
        for label in grades:
            domain.index(label)
        return cls(domain=domain, mu=tuple(grades.get(label, ZERO) for label in domain))

    @classmethod
    def full(cls, domain: Domain) -> FuzzySubset:
        return cls(domain=domain, mu=(ONE,) * len(domain))


class PossibilityDistribution(_Graded):
    """Possibility degrees ``pi`` restricting the value of an attribute."""

    pi: tuple[Degree, ...]

    @model_validator(mode="after")
    def _length(self) -> PossibilityDistribution:
        self._check_length(self.pi)
        return self

    @property
    def degrees(self) -> tuple[Degree, ...]:
        return self.pi

    @property
    def is_normalized(self) -> bool:
        return self.height == ONE

    @property
    def subnormality(self) -> Degree:
        return self.height.complement()

    @property
    def is_ignorance(self) -> bool:
        return all(p == ONE for p in self.pi)

    def as_subset(self) -> FuzzySubset:
        return FuzzySubset(domain=self.domain, mu=self.pi)

    def restrict_to(self, domain: Domain) -> PossibilityDistribution:
        mapping = self.as_mapping()
        return PossibilityDistribution(
            domain=domain, pi=tuple(mapping.get(label, ZERO) for label in domain)
        )

    @classmethod
    def ignorance(cls, domain: Domain) -> PossibilityDistribution:
        """Total ignorance: every value completely possible."""
        return cls(domain=domain, pi=(ONE,) * len(domain))

    @classmethod
    def from_mapping(cls, domain: Domain, grades: Mapping[str, Degree]) -> PossibilityDistribution:
        for label in grades:
            domain.index(label)
        return cls(domain=domain, pi=tuple(grades.get(label, ZERO) for label in domain))
