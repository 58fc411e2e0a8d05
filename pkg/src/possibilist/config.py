"""Application configuration using Pydantic settings."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from .models.degree import Degree
from .models.query import OutputFormat


class Settings(BaseSettings):
    """Settings loaded from ``POSSIBILIST_*`` environment variables and ``.env``."""

    model_config = SettingsConfigDict(
        env_prefix="POSSIBILIST_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    log_level: str = "WARNING"

    # Output and explanation defaults (command-line flags take precedence)
    output_format: OutputFormat = OutputFormat.HUMAN
    permissive_facts: bool = False
    display_threshold: Degree | None = None
    include_rule_uncertainty: bool = False

    # Solver
    max_enumerated_solutions: int = Field(default=256, ge=1)

    # Server Configuration
    api_host: str = "127.0.0.1"
    api_port: int = 8000


@lru_cache
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()
