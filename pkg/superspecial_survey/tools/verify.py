"""Verify tool for superspecial-survey."""

import json
from typing import Any, Dict

from ..core.ff import PrimeModulus
from ..core.geometry import (
    MINOR_PAIRS,
    curve_definition,
    jacobian_minors,
    verify_smoothness_certificate,
)
from ..errors import SingularCharacteristicError
from ..utils.config import get_settings
from .check import error_payload, require_int


class VerifyTool:
    """Check the symbolic smoothness certificate of C_p."""

    def __init__(self):
        self.settings = get_settings()

    def run(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        p = require_int(arguments, "p")
        modulus = PrimeModulus.checked(p, self.settings.max_prime)
        defn = curve_definition(modulus.p)
        try:
            certificate = verify_smoothness_certificate(defn)
        except SingularCharacteristicError as e:
            # p = 3: report the vanishing Jacobian instead of a certificate
            minors = jacobian_minors(defn)
            return {
                "p": p,
                "singular": True,
                "verified": False,
                "reason": str(e),
                "minors": {
                    f"f{n}": f.render() for n, f in enumerate(minors.as_tuple(), start=1)
                },
                "minor_pairs": ["".join(pair) for pair in MINOR_PAIRS],
                "all_minors_zero": minors.all_zero(),
            }
        payload = certificate.model_dump()
        payload["singular"] = False
        return payload

    async def execute(self, arguments: Dict[str, Any]) -> str:
        """
        Verify that x, y, z, w lie in the radical of <P, Q, J(P,Q)>.

        Args:
            p: Odd prime; p = 3 reports the vanishing Jacobian minors instead

        Returns:
            JSON string with the six minors and the four identity residuals
        """
        try:
            return json.dumps(self.run(arguments), indent=2)
        except Exception as e:
            return error_payload(e)
