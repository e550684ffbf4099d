"""Density tool for superspecial-survey."""

import json
from typing import Any, Dict

from ..core.survey import density_scan
from .check import error_payload, require_int


class DensityTool:
    """Share of superspecial primes up to a limit."""

    def run(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        report = density_scan(require_int(arguments, "limit"))
        payload = report.model_dump(mode="json")
        payload["ratio_float"] = round(float(report.ratio), 6)
        payload["deviation"] = round(report.deviation, 6)
        return payload

    async def execute(self, arguments: Dict[str, Any]) -> str:
        """
        Scan primes 5 <= p <= limit by residue mod 3.

        Args:
            limit: Integer >= 5

        Returns:
            JSON string with the ratio as "a/b", the expected 1/2 and checkpoint ratios
        """
        try:
            return json.dumps(self.run(arguments), indent=2)
        except Exception as e:
            return error_payload(e)
