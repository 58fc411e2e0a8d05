"""Consultation API endpoints."""

from pathlib import Path
from typing import Any

from fastapi import APIRouter, HTTPException

from ...config import get_settings
from ...errors import PossibilistError
from ...models.query import ConsultationRequest
from ...services import ConsultationService
from ..errors import http_error

router = APIRouter()


@router.post("")
async def create_consultation(request: ConsultationRequest, atoms: bool = False) -> dict[str, Any]:
    """Run a consultation; the response carries distributions, atom tables and the trace."""
    service = ConsultationService(get_settings())
    try:
        _, consultation = service.consult(
            request.kb, request.facts, permissive=request.permissive
        )
    except PossibilistError as exc:
        raise http_error(exc) from exc

    document = service.consultation_report(consultation, atoms)
    document["rendered"] = service.render_consultation(consultation, atoms)
    return document


@router.get("/example")
async def example_consultation() -> dict[str, str]:
    """The shipped knowledge base and facts, ready to post back."""
    data = Path(__file__).parent.parent.parent / "data"
    try:
        return {
            "kb": (data / "professions.kb").read_text(encoding="utf-8"),
            "facts": (data / "peter.facts").read_text(encoding="utf-8"),
            "belief": (data / "peter.belief").read_text(encoding="utf-8"),
        }
    except OSError as exc:
        raise HTTPException(status_code=500, detail=f"example data unavailable: {exc}") from exc
