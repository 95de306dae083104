"""Environment-driven configuration using pydantic-settings."""

from __future__ import annotations

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


class Settings(BaseSettings):
    """Process-wide defaults. All values can be overridden via env vars prefixed ``EDGELAB_``.

    Experiment files and CLI flags take precedence over these values; the
    settings only fill in what neither of them names.
    """

    model_config = SettingsConfigDict(
        env_prefix="EDGELAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # --- execution ---
    threads: int = Field(default=1, ge=1)
    fast_largest_eigen: bool = True

    # --- experiment defaults ---
    epsilon: float = Field(default=0.15, gt=0.0, lt=2.0 / 3.0)
    window_m: float = Field(default=2.0, gt=0.0)
    flow_terminal_time: float = Field(default=50.0, gt=0.0)

    # --- output ---
    output_dir: str = "."
    log_level: LogLevel = "INFO"
