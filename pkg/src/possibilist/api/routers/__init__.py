"""API routers."""

from . import consultations, explanations

__all__ = ["consultations", "explanations"]
