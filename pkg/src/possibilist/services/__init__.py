"""Possibilist services."""

from .consultation_service import ConsultationService

__all__ = ["ConsultationService"]
