"""Mapping of engine errors to HTTP responses."""

from fastapi import HTTPException

from ..errors import (
    DiagnosticsError,
    MissingBeliefError,
    NotDerivedError,
    PossibilistError,
    UnknownAttributeError,
    UnknownElementError,
    UnknownRuleError,
)
from ..ruleio import format_diagnostic


def http_error(exc: PossibilistError) -> HTTPException:
    if isinstance(exc, DiagnosticsError):
        detail = [
            {**diagnostic.model_dump(), "text": format_diagnostic(diagnostic, exc.source)}
            for diagnostic in exc.diagnostics
        ]
        return HTTPException(status_code=422, detail=detail)
    if isinstance(exc, (UnknownAttributeError, UnknownElementError, UnknownRuleError)):
        return HTTPException(status_code=404, detail=str(exc))
    if isinstance(exc, (NotDerivedError, MissingBeliefError)):
        return HTTPException(status_code=422, detail=str(exc))
    return HTTPException(status_code=400, detail=str(exc))
