"""Positioned diagnostics with stable codes."""

from __future__ import annotations

from typing import Generic, TypeVar

from pydantic import BaseModel, ConfigDict, Field

from ..errors import DiagnosticsError

T = TypeVar("T")

CODES = {
    "E001": "lexical error",
    "E002": "syntax error",
    "E101": "invalid degree",
    "E201": "unknown domain",
    "E202": "unknown attribute",
    "E203": "unknown term",
    "E204": "unknown element",
    "E205": "duplicate declaration",
    "E206": "reserved catch-all name",
    "E207": "conflicting contexts",
    "E208": "unknown uncertainty parameter",
    "E209": "misplaced section",
    "E301": "weight normalization",
    "E302": "subnormal distribution",
    "E303": "fuzzy conclusion not normalized",
    "E304": "mixed connectives",
    "E401": "cyclic dependency",
    "E501": "input/output error",
}


class Diagnostic(BaseModel):
    model_config = ConfigDict(frozen=True)

    code: str = Field(..., pattern=r"^E\d{3}$")
    message: str
    line: int = 1
    column: int = 1


def format_diagnostic(diagnostic: Diagnostic, file: str = "<input>") -> str:
    """``file:line:col: CODE message``."""
    return f"{file}:{diagnostic.line}:{diagnostic.column}: {diagnostic.code} {diagnostic.message}"


class ParseResult(BaseModel, Generic[T]):
    """A parsed value, or the diagnostics explaining why there is none."""

    value: T | None = None
    diagnostics: list[Diagnostic] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.value is not None and not self.diagnostics

    def unwrap(self, source: str = "<input>") -> T:
        if not self.ok:
            raise DiagnosticsError(self.diagnostics, source)
        return self.value
