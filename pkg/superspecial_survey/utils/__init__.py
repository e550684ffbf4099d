"""superspecial-survey utilities."""

from .logger import Logger
from .config import Settings, get_settings
from .cache import SurveyCache
from .analytics import (
    log_tool_execution,
    get_execution_history
)

__all__ = [
    "Logger",
    "Settings",
    "get_settings",
    "SurveyCache",
    "log_tool_execution",
    "get_execution_history"
]
