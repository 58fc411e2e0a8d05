"""Query requests shared by the command line and the HTTP API."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field, model_validator

from .degree import Degree
from .system import Side


class QueryKind(str, Enum):
    CONSULT = "consult"
    HOW = "how"
    MAINLY = "mainly"
    WHY_AT_LEAST = "why-at-least"
    WHY_AT_MOST = "why-at-most"
    SENSITIVITY = "sensitivity"
    SURPRISE = "surprise"
    CERTAINTY = "certainty"
    DIAGNOSE = "diagnose"


class OutputFormat(str, Enum):
    HUMAN = "human"
    STRUCTURED = "structured"


_NEEDS_ELEMENT = {
    QueryKind.MAINLY,
    QueryKind.WHY_AT_LEAST,
    QueryKind.WHY_AT_MOST,
    QueryKind.SENSITIVITY,
    QueryKind.CERTAINTY,
}
_NEEDS_THRESHOLD = {QueryKind.WHY_AT_LEAST, QueryKind.WHY_AT_MOST}


class QueryRequest(BaseModel):
    kind: QueryKind
    attribute: str | None = None
    element: str | None = None
    threshold: Degree | None = None
    rule: str | None = Field(default=None, description="rule id, for sensitivity queries")
    side: Side | None = Field(default=None, description="input side, for sensitivity queries")
    kb_path: str | None = None
    facts_path: str | None = None
    belief_path: str | None = None
    output_format: OutputFormat = OutputFormat.HUMAN

    @model_validator(mode="after")
    def _kind_fields(self) -> QueryRequest:
        if self.kind is not QueryKind.CONSULT and not self.attribute:
            raise ValueError(f"{self.kind.value} queries need an attribute")
        if self.kind in _NEEDS_ELEMENT and not self.element:
            raise ValueError(f"{self.kind.value} queries need an element")
        if self.kind in _NEEDS_THRESHOLD and self.threshold is None:
            raise ValueError(f"{self.kind.value} queries need a threshold")
        if self.kind is QueryKind.SENSITIVITY and (self.rule is None or self.side is None):
            raise ValueError("sensitivity queries need a rule and a side")
        return self


class ConsultationRequest(BaseModel):
    """Knowledge base and facts as text, for one consultation over HTTP."""

    kb: str
    facts: str = ""
    permissive: bool = False


class ExplanationRequest(ConsultationRequest):
    belief: str | None = None
    query: QueryRequest
