"""
Configuration: environment-driven settings and logging setup
Values come from the process environment or a local .env file
"""

from __future__ import annotations

import logging
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def log_level_name(level: str) -> str:
    """Upper-cased level name; unknown names raise ValueError"""
    name = str(level).strip().upper()
    if name not in LOG_LEVELS:
        raise ValueError(f"unknown log level {level!r}, expected one of {', '.join(LOG_LEVELS)}")
    return name


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    log_level: str = "WARNING"
    max_word_length: int = Field(default=10_000, ge=1)
    graph_recursion_limit: int = Field(default=200, ge=10)

    @field_validator("log_level", mode="before")
    @classmethod
    def _known_level(cls, value: str) -> str:
        return log_level_name(value)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Load settings once per process"""
    load_dotenv()
    return Settings(
        log_level=os.getenv("SYMPLECTIC_LOG_LEVEL", "WARNING"),
        max_word_length=int(os.getenv("SYMPLECTIC_MAX_WORD_LENGTH", "10000")),
        graph_recursion_limit=int(os.getenv("SYMPLECTIC_GRAPH_RECURSION_LIMIT", "200")),
    )


def configure_logging(level: str | None = None) -> None:
    """Install a single stderr handler on the package logger"""
    settings = get_settings()
    logger = logging.getLogger("symplectic_rigidity")
    logger.setLevel(log_level_name(level) if level else settings.log_level)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
