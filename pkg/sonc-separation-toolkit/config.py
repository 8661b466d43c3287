"""Configuration management for the SONC separation toolkit.

This module provides environment-specific configuration handling using Pydantic BaseSettings.
It includes settings for parallelism, logging, random generation and the experiment defaults.
Every field can be overridden with an environment variable carrying the ``SONC_SEP_`` prefix,
e.g. ``SONC_SEP_THREADS=4``.
"""

from typing import Optional
from pydantic import BaseSettings, Field, validator
import logging
import psutil
from enum import Enum

class EnvironmentType(str, Enum):
    DEVELOPMENT = "development"
    TESTING = "testing"
    PRODUCTION = "production"

# PUBLIC_INTERFACE
class Settings(BaseSettings):
    """Main configuration settings class using Pydantic BaseSettings for validation."""

    # Environment Settings
    ENV: EnvironmentType = Field(
        default=EnvironmentType.DEVELOPMENT,
        description="Current environment (development/testing/production)"
    )
    DEBUG: bool = Field(default=False, description="Debug mode flag")

    # Parallelism
    THREADS: Optional[int] = Field(
        default=None,
        description="Cap on restart/verification workers; defaults to the physical CPU count"
    )

    # Exact arithmetic limits
    SAMPLING_RETRIES: int = Field(default=100, description="Interior-point draws before shrinking a circuit")
    MAX_U_DENOMINATOR: int = Field(default=2 ** 20, description="Largest k scanned for u = 1 + 1/k")
    RATIONALIZE_DENOMINATOR: int = Field(default=2 ** 32, description="Denominator cap when rationalizing floats")
    PROJECTION_HALVINGS: int = Field(default=64, description="Halvings of c_beta before it is zeroed")
    NEGATIVE_POINT_BUDGET: int = Field(default=4096, description="Evaluations spent searching for a negative point")

    # Experiment defaults
    ATTACK_BUDGET: int = Field(default=100_000, description="Iterations per attack restart")
    ATTACK_RESTARTS: int = Field(default=8, description="Independent attack restarts")
    ATTACK_PARTS: int = Field(default=6, description="Circuit parts in an attack candidate")
    GRID_RESOLUTION: int = Field(default=33, description="Grid points per axis for the sup-norm")
    VERIFY_INTERVAL: int = Field(default=500, description="Iterations between exact verifications of the incumbent")

    # Logging Settings
    LOG_LEVEL: str = Field(default="WARNING", description="Logging level")
    LOG_FORMAT: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(correlation_id)s - %(message)s",
        description="Log format string"
    )
    LOG_FILE: Optional[str] = Field(default=None, description="Log file path")
    LOG_JSON: bool = Field(default=False, description="Emit log records as JSON lines")

    @validator("LOG_LEVEL")
    def validate_log_level(cls, v):
        """Validate that the log level is valid."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Invalid log level. Must be one of {valid_levels}")
        return v.upper()

    @validator("ENV")
    def validate_environment(cls, v):
        """Validate the environment type."""
        if v not in EnvironmentType:
            raise ValueError(f"Invalid environment. Must be one of {list(EnvironmentType)}")
        return v

    @validator("THREADS")
    def validate_threads(cls, v):
        """Validate that an explicit worker cap is positive."""
        if v is not None and v < 1:
            raise ValueError("THREADS must be at least 1")
        return v

    @validator("GRID_RESOLUTION")
    def validate_grid_resolution(cls, v):
        """The sup-norm grid needs at least 8 points per axis."""
        if v < 8:
            raise ValueError("GRID_RESOLUTION must be at least 8")
        return v

    @validator(
        "SAMPLING_RETRIES", "MAX_U_DENOMINATOR", "RATIONALIZE_DENOMINATOR",
        "PROJECTION_HALVINGS", "NEGATIVE_POINT_BUDGET", "ATTACK_BUDGET",
        "ATTACK_RESTARTS", "ATTACK_PARTS", "VERIFY_INTERVAL",
    )
    def validate_positive(cls, v, field):
        if v < 1:
            raise ValueError(f"{field.name} must be at least 1")
        return v

    def configure_logging(self) -> None:
        """Configure logging based on the settings."""
        # Imported here so that importing config never pulls in handler setup.
        from middleware.logging_middleware import install_handlers

        install_handlers(
            level=getattr(logging, self.LOG_LEVEL),
            fmt=self.LOG_FORMAT,
            filename=self.LOG_FILE,
            json_lines=self.LOG_JSON,
        )

    def thread_count(self) -> int:
        """Get the effective number of worker threads."""
        if self.THREADS is not None:
            return self.THREADS
        return psutil.cpu_count(logical=False) or 1

    class Config:
        env_prefix = "SONC_SEP_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True

# Create a global settings instance
settings = Settings()
