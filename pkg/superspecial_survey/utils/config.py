"""
Settings
Environment-driven configuration for superspecial-survey.

Values come from SUPERSPECIAL_* environment variables; a .env file in the
working directory is loaded first.
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from ..errors import ConfigurationError

ENV_PREFIX = "SUPERSPECIAL_"


class Settings(BaseModel):
    """Runtime knobs for the engines, the survey driver and the CLI."""

    expansion_gate: int = Field(default=13, ge=3)
    brute_gate: int = Field(default=13, ge=3)
    max_prime: int = Field(default=1_000_000, ge=3)
    cube_table_limit: int = Field(default=1_000_000, ge=0)
    workers: int = Field(default=0, ge=0)
    home: Path = Field(default_factory=lambda: Path.home() / ".superspecial-survey")
    log_level: str = "WARNING"

    @property
    def cache_file(self) -> Path:
        return self.home / "survey-cache.jsonl"

    @property
    def history_file(self) -> Path:
        return self.home / ".runs" / "history.jsonl"

    def effective_workers(self) -> int:
        """Pool size with 0 meaning one worker per CPU."""
        if self.workers:
            return self.workers
        return os.cpu_count() or 1


_INT_SETTINGS = {
    "expansion_gate": "EXPANSION_GATE",
    "brute_gate": "BRUTE_GATE",
    "max_prime": "MAX_PRIME",
    "cube_table_limit": "CUBE_TABLE_LIMIT",
    "workers": "WORKERS",
}


def _read_int(name: str) -> Optional[int]:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw.strip())
    except ValueError:
        raise ConfigurationError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}")


def get_settings() -> Settings:
    """Build a Settings instance from the current environment."""
    load_dotenv()

    values = {}
    for field_name, env_name in _INT_SETTINGS.items():
        value = _read_int(env_name)
        if value is not None:
            values[field_name] = value

    home = os.getenv(ENV_PREFIX + "HOME")
    if home and home.strip():
        values["home"] = Path(home.strip()).expanduser()

    level = os.getenv(ENV_PREFIX + "LOG_LEVEL")
    if level and level.strip():
        values["log_level"] = level.strip().upper()

    try:
        return Settings(**values)
    except ValueError as e:
        raise ConfigurationError(f"Invalid {ENV_PREFIX}* setting: {e}")
