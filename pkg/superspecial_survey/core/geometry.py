"""
Defining data of C_p : P = Q = 0 in P^3 and its smoothness certificate.

Q = 2yw + z^2 and P = x^3 + y^3 + w^3. The certificate expresses the pure
powers x^5, 2y^4, z^5, 2w^4 as explicit combinations of P, Q and the 2x2
minors of the Jacobian matrix, so x, y, z, w lie in the radical of
<P, Q, J(P,Q)> and the singular locus is empty.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from ..errors import SingularCharacteristicError
from .ff import PrimeModulus
from .mpoly import VARIABLES, SparsePoly, poly_mul

logger = logging.getLogger(__name__)

# Variable pairs (u, v) of the minors dP/du * dQ/dv - dP/dv * dQ/du
MINOR_PAIRS: Tuple[Tuple[str, str], ...] = (
    ("x", "y"),
    ("x", "z"),
    ("x", "w"),
    ("y", "z"),
    ("y", "w"),
    ("z", "w"),
)


def derivative(f: SparsePoly, var: str) -> SparsePoly:
    """Formal partial derivative: exponent times coefficient, exponent decremented."""
    slot = VARIABLES.index(var)
    terms = {}
    for ev, c in f.items():
        exponent = ev[slot]
        if exponent == 0:
            continue
        lowered = list(ev)
        lowered[slot] -= 1
        terms[tuple(lowered)] = exponent * c
    return SparsePoly(f.modulus, terms)


@dataclass(frozen=True)
class CurveDefinition:
    """The quadric Q = 2yw + z^2 and cubic P = x^3 + y^3 + w^3 over F_p."""

    modulus: PrimeModulus
    Q: SparsePoly
    P: SparsePoly

    @property
    def p(self) -> int:
        return self.modulus.p

    def qp(self) -> SparsePoly:
        return poly_mul(self.Q, self.P)

    def variable(self, name: str) -> SparsePoly:
        return SparsePoly.variable(self.modulus, name)


@lru_cache(maxsize=None)
def curve_definition(p: int) -> CurveDefinition:
    modulus = PrimeModulus(p)
    Q = SparsePoly(modulus, {(0, 1, 0, 1): 2, (0, 0, 2, 0): 1})
    P = SparsePoly(modulus, {(3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 0, 3): 1})
    return CurveDefinition(modulus, Q, P)


@dataclass(frozen=True)
class MinorSet:
    """The six 2x2 minors f1..f6 of the Jacobian matrix of (P, Q)."""

    f1: SparsePoly
    f2: SparsePoly
    f3: SparsePoly
    f4: SparsePoly
    f5: SparsePoly
    f6: SparsePoly

    def as_tuple(self) -> Tuple[SparsePoly, ...]:
        return (self.f1, self.f2, self.f3, self.f4, self.f5, self.f6)

    def all_zero(self) -> bool:
        return all(f.is_zero() for f in self.as_tuple())


def minor(defn: CurveDefinition, u: str, v: str) -> SparsePoly:
    return derivative(defn.P, u) * derivative(defn.Q, v) - derivative(defn.P, v) * derivative(
        defn.Q, u
    )


def jacobian_minors(defn: CurveDefinition) -> MinorSet:
    return MinorSet(*(minor(defn, u, v) for u, v in MINOR_PAIRS))


class IdentityCheck(BaseModel):
    """One radical-membership identity and its symbolic residual."""

    name: str
    combination: str
    target: str
    lhs: str
    residual: str
    verified: bool
    f5_sign: Optional[str] = None
    printed_sign_residual: Optional[str] = None


class SmoothnessCertificate(BaseModel):
    p: int
    minors: Dict[str, str]
    identities: List[IdentityCheck]
    verified: bool


def _identity(name: str, combination: str, lhs: SparsePoly, target: SparsePoly) -> IdentityCheck:
    residual = lhs - target
    return IdentityCheck(
        name=name,
        combination=combination,
        target=target.render(),
        lhs=lhs.render(),
        residual=residual.render(),
        verified=residual.is_zero(),
    )


def verify_smoothness_certificate(defn: CurveDefinition) -> SmoothnessCertificate:
    """Check the four radical-membership identities symbolically over F_p."""
    if defn.p <= 3:
        raise SingularCharacteristicError(
            f"certificate undefined in characteristic <= 3 (p={defn.p}): 6 is not invertible "
            "and every point of V(Q,P) is singular"
        )

    minors = jacobian_minors(defn)
    m = defn.modulus
    x, y, z, w = (defn.variable(name) for name in VARIABLES)
    P, Q = defn.P, defn.Q
    inv6 = m(6).inverse()
    inv3 = m(3).inverse()

    checks = [
        _identity(
            "x",
            "x^2*P - 6^-1*y^2*f3 - 6^-1*w^2*f1",
            x * x * P - inv6 * y * y * minors.f3 - inv6 * w * w * minors.f1,
            x ** 5,
        ),
    ]

    # The f5 term of the y-identity is tried with both signs; only one can
    # leave a zero residual.
    target_y = 2 * y ** 4
    base_y = y * P - inv6 * x * minors.f3
    printed = base_y - inv6 * y * minors.f5
    flipped = base_y + inv6 * y * minors.f5
    if (printed - target_y).is_zero():
        check_y = _identity("y", "y*P - 6^-1*x*f3 - 6^-1*y*f5", printed, target_y)
        check_y.f5_sign = "-"
    else:
        check_y = _identity("y", "y*P - 6^-1*x*f3 + 6^-1*y*f5", flipped, target_y)
        check_y.f5_sign = "+"
        logger.debug(
            "y-identity needs +6^-1*y*f5",
            extra={"p": defn.p, "printed_residual": (printed - target_y).render()},
        )
    check_y.printed_sign_residual = (printed - target_y).render()
    checks.append(check_y)

    checks.append(
        _identity(
            "z",
            "(-2*y*z*w + z^3)*Q + 2*3^-1*w^2*f4",
            (-2 * y * z * w + z ** 3) * Q + 2 * inv3 * w * w * minors.f4,
            z ** 5,
        )
    )
    checks.append(
        _identity(
            "w",
            "w*P - 6^-1*x*f1 - 6^-1*w*f5",
            w * P - inv6 * x * minors.f1 - inv6 * w * minors.f5,
            2 * w ** 4,
        )
    )

    names = [f"f{n}" for n in range(1, 7)]
    return SmoothnessCertificate(
        p=defn.p,
        minors={name: f.render() for name, f in zip(names, minors.as_tuple())},
        identities=checks,
        verified=all(check.verified for check in checks),
    )
