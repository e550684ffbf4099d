"""Count tool for superspecial-survey."""

import json
from typing import Any, Dict

from ..core.counting import CountMethod, count_points
from ..core.ff import PrimeModulus
from ..utils.config import get_settings
from .check import error_payload, require_int

METHODS = ("fast", "brute", "both")


class CountTool:
    """Count F_{p^2}-points of C_p and classify against the Hasse-Weil bounds."""

    def __init__(self):
        self.settings = get_settings()

    def _count(self, modulus: PrimeModulus, method: CountMethod) -> Dict[str, Any]:
        record = count_points(
            modulus,
            method,
            brute_gate=self.settings.brute_gate,
            cube_table_limit=self.settings.cube_table_limit,
        )
        payload = record.model_dump(mode="json")
        payload["label"] = record.max_label
        return payload

    def run(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        p = require_int(arguments, "p")
        method = arguments.get("method", "fast")
        if method not in METHODS:
            raise ValueError(f"method must be one of {', '.join(METHODS)}, got {method!r}")

        modulus = PrimeModulus.checked(p, self.settings.max_prime)
        if method != "both":
            return self._count(modulus, CountMethod(method))

        fast = self._count(modulus, CountMethod.FAST)
        brute = self._count(modulus, CountMethod.BRUTE)
        return {
            "p": p,
            "fast": fast,
            "brute": brute,
            "agrees": fast["count"] == brute["count"],
        }

    async def execute(self, arguments: Dict[str, Any]) -> str:
        """
        Count points of C_p over F_{p^2}.

        Args:
            p: Odd prime
            method: "fast" (default) | "brute" | "both"

        Returns:
            JSON string with count, bounds and classification
        """
        try:
            return json.dumps(self.run(arguments), indent=2)
        except Exception as e:
            return error_payload(e)
