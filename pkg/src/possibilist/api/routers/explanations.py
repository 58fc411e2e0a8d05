"""Explanation query API endpoints."""

from typing import Any

from fastapi import APIRouter, HTTPException

from ...config import get_settings
from ...errors import PossibilistError
from ...models.query import ExplanationRequest, QueryKind
from ...services import ConsultationService
from ..errors import http_error

router = APIRouter()


@router.post("")
async def create_explanation(request: ExplanationRequest) -> dict[str, Any]:
    """Answer one query about the consultation of ``request.kb`` on ``request.facts``."""
    if request.query.kind is QueryKind.CONSULT:
        raise HTTPException(status_code=422, detail="use /api/v1/consultations for consult")

    service = ConsultationService(get_settings())
    try:
        kb, consultation = service.consult(
            request.kb, request.facts, permissive=request.permissive
        )
        beliefs = service.load_beliefs(kb, request.belief) if request.belief else None
        report, rendered = service.answer(consultation, request.query, beliefs)
    except PossibilistError as exc:
        raise http_error(exc) from exc

    query = request.query.model_dump(
        mode="json", exclude={"kb_path", "facts_path", "belief_path", "output_format"}
    )
    return {
        "query": query,
        "report": report.model_dump(mode="json"),
        "rendered": rendered,
    }
