"""Coeffs tool for superspecial-survey."""

import json
from typing import Any, Dict

from ..core.ff import PrimeModulus
from ..core.hassewitt import (
    coefficient_via_enumeration,
    coefficient_via_expansion,
    target_monomials,
)
from ..utils.config import get_settings
from .check import error_payload, require_int

METHODS = ("enumeration", "expansion", "both")


class CoeffsTool:
    """List the 16 target coefficients of (QP)^(p-1)."""

    def __init__(self):
        self.settings = get_settings()

    def run(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        p = require_int(arguments, "p")
        method = arguments.get("method", "enumeration")
        if method not in METHODS:
            raise ValueError(f"method must be one of {', '.join(METHODS)}, got {method!r}")

        modulus = PrimeModulus.checked(p, self.settings.max_prime)
        gate = self.settings.expansion_gate
        entries = []
        agrees = True
        for ev in target_monomials(modulus).entries:
            entry: Dict[str, Any] = {"exponent": list(ev), "monomial": ev.monomial()}
            if method in ("enumeration", "both"):
                entry["enumeration"] = coefficient_via_enumeration(modulus, ev).value
            if method in ("expansion", "both"):
                entry["expansion"] = coefficient_via_expansion(modulus, ev, gate).value
            if method == "both":
                entry["agrees"] = entry["enumeration"] == entry["expansion"]
                agrees = agrees and entry["agrees"]
            entry["coefficient"] = entry.get("enumeration", entry.get("expansion"))
            entries.append(entry)

        payload: Dict[str, Any] = {"p": p, "method": method, "coefficients": entries}
        if method == "both":
            payload["agrees"] = agrees
        return payload

    async def execute(self, arguments: Dict[str, Any]) -> str:
        """
        Compute the 16 target coefficients.

        Args:
            p: Prime greater than 3
            method: "enumeration" (default) | "expansion" | "both"

        Returns:
            JSON string with one (monomial, coefficient) entry per target, row-major
        """
        try:
            return json.dumps(self.run(arguments), indent=2)
        except Exception as e:
            return error_payload(e)
