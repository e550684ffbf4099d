"""Check tool for superspecial-survey."""

import json
import logging
from typing import Any, Dict

from ..core.ff import PrimeModulus
from ..core.hassewitt import is_superspecial
from ..utils.config import get_settings

logger = logging.getLogger(__name__)


def require_int(arguments: Dict[str, Any], name: str) -> int:
    """Fetch an integer argument, rejecting missing values and booleans."""
    value = arguments.get(name)
    if value is None:
        raise ValueError(f"{name} is required")
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    return value


def error_payload(e: Exception) -> str:
    return json.dumps({"error": str(e), "error_type": type(e).__name__})


class CheckTool:
    """Decide superspeciality of C_p from the 16 target coefficients."""

    def __init__(self):
        self.settings = get_settings()

    def run(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        p = require_int(arguments, "p")
        method = arguments.get("method", "enumeration")
        modulus = PrimeModulus.checked(p, self.settings.max_prime)
        report = is_superspecial(modulus, method=method, gate=self.settings.expansion_gate)

        payload = report.model_dump()
        payload["method"] = method
        payload["nonzero_count"] = len(report.nonzero)
        return payload

    async def execute(self, arguments: Dict[str, Any]) -> str:
        """
        Check whether C_p is superspecial.

        Args:
            p: Prime greater than 3
            method: "enumeration" (default) | "expansion"

        Returns:
            JSON string with the verdict, the p mod 3 prediction and all 16 coefficients
        """
        try:
            return json.dumps(self.run(arguments), indent=2)
        except Exception as e:
            logger.debug(f"check failed: {e}")
            return error_payload(e)
