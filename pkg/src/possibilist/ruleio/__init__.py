"""Knowledge-base, facts and belief text formats."""

from .diagnostics import CODES, Diagnostic, ParseResult, format_diagnostic
from .folding import fold_paired_contexts
from .parser import parse_beliefs, parse_facts, parse_kb, read_source
from .serializer import (
    serialize,
    serialize_beliefs,
    serialize_facts,
    serialize_kb,
    serialize_report,
)

__all__ = [
    "CODES",
    "Diagnostic",
    "ParseResult",
    "fold_paired_contexts",
    "format_diagnostic",
    "parse_beliefs",
    "parse_facts",
    "parse_kb",
    "read_source",
    "serialize",
    "serialize_beliefs",
    "serialize_facts",
    "serialize_kb",
    "serialize_report",
]
