"""Primitive combinators over fuzzy subsets and possibility distributions.

Every function here is pure and exact: the only arithmetic is min, max and
1 - x on thousandths.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainMismatchError, NotCrispError
from .models.degree import ZERO, Degree
from .models.fuzzy import Domain, FuzzySubset, PossibilityDistribution, _Graded


def _same_domain(a: _Graded, b: _Graded) -> None:
    if a.domain != b.domain:
        raise DomainMismatchError(
            f"domain {a.domain.name!r} {a.domain.elements} does not match "
            f"domain {b.domain.name!r} {b.domain.elements}"
        )


def complement(f: FuzzySubset) -> FuzzySubset:
    """Pointwise 1 - mu."""
    return FuzzySubset(domain=f.domain, mu=tuple(m.complement() for m in f.mu))


def min_combine(
    p1: PossibilityDistribution, p2: PossibilityDistribution
) -> PossibilityDistribution:
    """Conjunctive combination: pointwise min."""
    _same_domain(p1, p2)
    return PossibilityDistribution(domain=p1.domain, pi=tuple(map(min, p1.pi, p2.pi)))


def max_combine(
    p1: PossibilityDistribution, p2: PossibilityDistribution
) -> PossibilityDistribution:
    """Disjunctive combination: pointwise max."""
    _same_domain(p1, p2)
    return PossibilityDistribution(domain=p1.domain, pi=tuple(map(max, p1.pi, p2.pi)))


def consistency(f: FuzzySubset, p: PossibilityDistribution) -> Degree:
    """sup over the domain of min(mu, pi): how possible it is that the value lies in ``f``."""
    _same_domain(f, p)
    return max(map(min, f.mu, p.pi), default=ZERO)


def cardinality(f: FuzzySubset) -> Fraction:
    """Scalar cardinality, the sum of memberships."""
    return Fraction(sum(int(m) for m in f.mu), 1000)


def specificity(p: PossibilityDistribution) -> Fraction:
    """Cardinality over domain size; 1 means total ignorance, small means precise."""
    return cardinality(p.as_subset()) / len(p.domain)


def height(p: PossibilityDistribution) -> Degree:
    return p.height


def subnormality(p: PossibilityDistribution) -> Degree:
    return p.subnormality


def ignorance(domain: Domain) -> PossibilityDistribution:
    return PossibilityDistribution.ignorance(domain)


def necessity(p: PossibilityDistribution, a: FuzzySubset) -> Degree:
    """Certainty that the value lies in the crisp set ``a``: 1 - max of pi outside ``a``."""
    _same_domain(a, p)
    if not a.is_crisp:
        raise NotCrispError("necessity is only defined here for ordinary (crisp) subsets")
    outside = (pi for pi, m in zip(p.pi, a.mu) if m == ZERO)
    return max(outside, default=ZERO).complement()
