"""Exception hierarchy for the possibilistic inference engine."""


class PossibilistError(Exception):
    """Base class for every error raised by the engine."""


class DegreeRangeError(PossibilistError, ValueError):
    """A degree literal is outside [0, 1] or finer than thousandths."""


class DomainMismatchError(PossibilistError, ValueError):
    """Two degree vectors are defined over different domains."""


class NotCrispError(PossibilistError, ValueError):
    """An ordinary (non-fuzzy) subset was required."""


class NotNormalizedError(PossibilistError, ValueError):
    """A normalized distribution or subset was required."""


class WeightNormalizationError(PossibilistError, ValueError):
    """Importance weights of a compound condition are not normalized."""


class EmptyRuleGroupError(PossibilistError, ValueError):
    """A rule group without rules cannot be combined."""


class ConclusionMismatchError(PossibilistError, ValueError):
    """Rules of one group conclude on different attributes or domains."""


class CyclicDependencyError(PossibilistError):
    """The attribute dependency graph of a rule base has a cycle."""

    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__(f"cyclic attribute dependency: {' -> '.join(cycle)}")


class DimensionMismatchError(PossibilistError, ValueError):
    """Matrix and vector sizes of a min-max system disagree."""


class UnknownAttributeError(PossibilistError, KeyError):
    """The attribute is not known to the knowledge base or consultation."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown attribute"


class UnknownElementError(PossibilistError, KeyError):
    """The element does not belong to the attribute's domain."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown element"


class NotDerivedError(PossibilistError):
    """The attribute was not concluded by any rule group in the consultation."""


class DiagnosticsError(PossibilistError):
    """Parsing produced diagnostics; carries them for reporting."""

    def __init__(self, diagnostics: list, source: str = "<input>"):
        self.diagnostics = diagnostics
        self.source = source
        first = diagnostics[0] if diagnostics else None
        super().__init__(f"{len(diagnostics)} diagnostic(s); first: {first}")


class UnknownRuleError(PossibilistError, KeyError):
    """No rule of the group has this id."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown rule"


class MissingBeliefError(PossibilistError):
    """A surprise query was asked without a belief model."""
