"""Shared fixtures: the shipped career-counselling knowledge base and Peter's profile."""

from pathlib import Path

import pytest

from possibilist.config import Settings, get_settings
from possibilist.engine import run_layers
from possibilist.ruleio import parse_beliefs, parse_facts, parse_kb
from possibilist.services import ConsultationService

DATA = Path(__file__).resolve().parent.parent / "src" / "possibilist" / "data"
KB_PATH = DATA / "professions.kb"
FACTS_PATH = DATA / "peter.facts"
BELIEF_PATH = DATA / "peter.belief"


@pytest.fixture
def kb_text() -> str:
    return KB_PATH.read_text(encoding="utf-8")


@pytest.fixture
def facts_text() -> str:
    return FACTS_PATH.read_text(encoding="utf-8")


@pytest.fixture
def belief_text() -> str:
    return BELIEF_PATH.read_text(encoding="utf-8")


@pytest.fixture
def kb(kb_text):
    return parse_kb(kb_text).unwrap()


@pytest.fixture
def facts(kb, facts_text):
    return parse_facts(facts_text, kb).unwrap()


@pytest.fixture
def beliefs(kb, belief_text):
    return parse_beliefs(belief_text, kb).unwrap()


@pytest.fixture
def consultation(kb, facts):
    return run_layers(kb, facts)


@pytest.fixture
def group(consultation):
    return consultation.group("profession")


@pytest.fixture
def settings() -> Settings:
    return Settings(_env_file=None)


@pytest.fixture
def service(settings) -> ConsultationService:
    return ConsultationService(settings)


@pytest.fixture
def paths() -> dict[str, str]:
    return {"kb": str(KB_PATH), "facts": str(FACTS_PATH), "belief": str(BELIEF_PATH)}


@pytest.fixture
def fresh_settings(monkeypatch):
    """Environment-independent cached settings for the command line and the API."""
    for name in ("OUTPUT_FORMAT", "PERMISSIVE_FACTS", "DISPLAY_THRESHOLD", "LOG_LEVEL"):
        monkeypatch.delenv(f"POSSIBILIST_{name}", raising=False)
    monkeypatch.setenv("POSSIBILIST_INCLUDE_RULE_UNCERTAINTY", "false")
    get_settings.cache_clear()
    yield get_settings()
    get_settings.cache_clear()
