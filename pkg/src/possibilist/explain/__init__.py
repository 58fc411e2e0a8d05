"""Explanations over a completed consultation."""

from .blame import certainty_view, explain_mainly, row_blame, surprise, surprise_degree
from .queries import diagnose_imprecision, explain_negative, explain_positive, sensitivity
from .trace import replay, trace_how

__all__ = [
    "certainty_view",
    "diagnose_imprecision",
    "explain_mainly",
    "explain_negative",
    "explain_positive",
    "replay",
    "row_blame",
    "sensitivity",
    "surprise",
    "surprise_degree",
    "trace_how",
]
