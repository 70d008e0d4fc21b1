# src/kontsevich/config.py

"""Kontsevich Intersection Configuration

This module contains all configuration settings for the intersection engine,
the command line and the HTTP service.
"""

from typing import Optional
from pydantic_settings import BaseSettings
from pydantic import Field, field_validator, ConfigDict

# Load .env file if it exists
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    # python-dotenv not installed, skipping .env load
    pass

LOG_LEVELS = {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}


class MbarSettings(BaseSettings):
    model_config = ConfigDict(
        env_file=".env",
        case_sensitive=True,
        extra="ignore"
    )

    # Persistent memo store
    MBAR_CACHE: Optional[str] = Field(
        default=None,
        description="Cache file location; the CLI --cache flag takes precedence"
    )

    # Logging
    MBAR_LOG_LEVEL: str = Field(
        default="INFO",
        description="Level of the stderr log sink"
    )
    MBAR_LOG_FILE: Optional[str] = Field(
        default=None,
        description="Optional log file sink"
    )

    # Execution
    MBAR_JOBS: int = Field(
        default=1,
        description="Default number of workers used for independent table rows"
    )

    # Gromov-Witten solver
    MBAR_GW_PLANE_FAST_PATH: bool = Field(
        default=True,
        description="Use the plane-curve recursion for r=2 invariants with only point conditions"
    )
    MBAR_GW_TESTED_MAX_RANK: int = Field(
        default=3,
        description="Targets P^r with r above this value are computed on a best effort basis"
    )

    # Memo keys
    MBAR_RELABEL_SEARCH_LIMIT: int = Field(
        default=720,
        description="Maximum number of marking permutations tried when canonicalizing a memo key"
    )

    # HTTP service
    MBAR_API_TITLE: str = Field(
        default="Kontsevich Intersection Service",
        description="Title reported by the HTTP service"
    )

    @field_validator("MBAR_JOBS")
    @classmethod
    def validate_jobs(cls, value: int) -> int:
        if value < 1:
            raise ValueError("MBAR_JOBS must be at least 1")
        return value

    @field_validator("MBAR_LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level: {value}")
        return level


# Create settings instance
mbar_settings = MbarSettings()
