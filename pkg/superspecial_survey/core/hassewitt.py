"""
Superspeciality criterion for C_p.

C_p (p > 3) is superspecial iff the coefficients of 16 specific monomials of
degree 5(p-1) in (QP)^(p-1) all vanish. Expanding with the multinomial
theorem over the six terms of

    QP = x^3z^2 + y^3z^2 + 2x^3yw + 2y^4w + z^2w^3 + 2yw^4

the coefficient of x^i y^j z^k w^l is the sum of 2^(c+d+f) * (p-1)!/(a!b!c!d!e!f!)
over the solution set S(i,j,k,l) of

    a + b + c + d + e + f = p - 1
    3a + 3c               = i
    3b + c + 4d + f       = j
    2a + 2b + 2e          = k
    c + d + 3e + 4f       = l

with every unknown in [0, p-1]. Eliminating gives 6(e + f) = l - (i + j - 3(p-1)),
which pins e + f and leaves a two-parameter search.

Coefficients are computed by enumerating S (any p) or, as an independent
oracle for small p, by literally expanding (QP)^(p-1).
"""

import logging
from functools import lru_cache
from typing import Iterator, List, NamedTuple, Optional, Set, Tuple

from pydantic import BaseModel, Field

from ..errors import GateExceededError, InconsistencyError, SingularCharacteristicError
from .ff import FieldElement, PrimeModulus
from .geometry import curve_definition
from .mpoly import Exponent4, SparsePoly, poly_pow

logger = logging.getLogger(__name__)

DEFAULT_EXPANSION_GATE = 13

# The 16 monomials for p = 5, row by row as the criterion lists them
# fmt: off
TARGETS_P5: Tuple[Tuple[int, int, int, int], ...] = (
    (8, 4, 4, 4), (9, 3, 4, 4), (9, 4, 3, 4), (9, 4, 4, 3),
    (3, 9, 4, 4), (4, 8, 4, 4), (4, 9, 3, 4), (4, 9, 4, 3),
    (3, 4, 9, 4), (4, 3, 9, 4), (4, 4, 8, 4), (4, 4, 9, 3),
    (3, 4, 4, 9), (4, 3, 4, 9), (4, 4, 3, 9), (4, 4, 4, 8),
)
# fmt: on


class SolutionTuple(NamedTuple):
    """Multinomial exponents of the six terms of QP."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def exponent(self) -> Exponent4:
        """The monomial x^i y^j z^k w^l this choice of terms produces."""
        a, b, c, d, e, f = self
        return Exponent4(
            3 * a + 3 * c,
            3 * b + c + 4 * d + f,
            2 * a + 2 * b + 2 * e,
            c + d + 3 * e + 4 * f,
        )


class TargetMonomialSet(NamedTuple):
    p: int
    entries: Tuple[Exponent4, ...]


class CoefficientEntry(BaseModel):
    exponent: Tuple[int, int, int, int]
    monomial: str
    coefficient: int


class SuperspecialReport(BaseModel):
    """Verdict of the 16-monomial criterion for one prime."""

    p: int
    coefficients: List[CoefficientEntry] = Field(default_factory=list)
    superspecial: bool
    predicted: bool
    agrees: bool

    @property
    def nonzero(self) -> List[CoefficientEntry]:
        return [entry for entry in self.coefficients if entry.coefficient]


def _require_smooth(p: int, what: str):
    if p <= 3:
        raise SingularCharacteristicError(
            f"{what} requires p > 3; for p={p} all the points on V(Q,P) are singular points"
        )


def _as_modulus(p) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


def target_monomials(p) -> TargetMonomialSet:
    """The 16 exponent vectors of the criterion, row-major.

    Row r puts the large exponent on variable r: on the diagonal it is
    2(p-1), elsewhere 2p-1 paired with p-2 on the column variable.
    """
    modulus = _as_modulus(p)
    p = modulus.p
    _require_smooth(p, "the superspeciality criterion")

    entries = []
    for row in range(4):
        for col in range(4):
            ev = [p - 1] * 4
            if row == col:
                ev[row] += p - 1
            else:
                ev[row] += p
                ev[col] -= 1
            entries.append(Exponent4(*ev))

    if p == 5 and tuple(entries) != TARGETS_P5:
        raise InconsistencyError("generated target monomials disagree with the p=5 table")
    return TargetMonomialSet(p, tuple(entries))


def _iter_solutions(p: int, ev) -> Iterator[Tuple[int, int, int, int, int, int]]:
    i, j, k, ell = ev
    n = p - 1
    if k % 2 or i % 3 or i + j + k + ell != 5 * n:
        return
    rest = ell - (i + j - 3 * n)
    if rest < 0 or rest % 6:
        return
    s = rest // 6  # e + f
    i3 = i // 3  # a + c
    half_k = k // 2  # a + b + e

    for f in range(max(0, s - n), min(s, n) + 1):
        e = s - f
        m = ell - 3 * e - 4 * f  # c + d
        if m < 0:
            continue
        # With a = i3 - c, d = m - c and b from the sum equation, b - c is fixed
        b0 = n - i3 - m - s
        if 3 * b0 + 4 * m + f != j or i3 + b0 + e != half_k:
            continue
        lo = max(0, m - n, i3 - n, -b0)
        hi = min(m, i3, n, n - b0)
        for c in range(lo, hi + 1):
            yield (i3 - c, b0 + c, c, m - c, e, f)


def enumerate_solutions(p, ev) -> Set[SolutionTuple]:
    """The set S(i,j,k,l) of solutions in [0, p-1]^6."""
    p = _as_modulus(p).p
    i, j, k, ell = ev
    if min(ev) < 0:
        raise ValueError(f"exponent vector must be non-negative, got {tuple(ev)!r}")
    solutions = set()
    for tup in _iter_solutions(p, (i, j, k, ell)):
        solution = SolutionTuple(*tup)
        if sum(solution) != p - 1 or solution.exponent() != (i, j, k, ell):
            raise InconsistencyError(f"enumeration produced a non-solution {solution} for {ev}")
        solutions.add(solution)
    logger.debug("S(%s) has %d solutions", tuple(ev), len(solutions), extra={"p": p})
    return solutions


@lru_cache(maxsize=64)
def _factorial_tables(p: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    """Factorials, inverse factorials and powers of two mod p, for arguments < p."""
    fact = [1] * p
    for n in range(1, p):
        fact[n] = fact[n - 1] * n % p
    inv_fact = [1] * p
    inv_fact[p - 1] = pow(fact[p - 1], -1, p)
    for n in range(p - 1, 0, -1):
        inv_fact[n - 1] = inv_fact[n] * n % p
    pow2 = [1] * p
    for n in range(1, p):
        pow2[n] = pow2[n - 1] * 2 % p
    return tuple(fact), tuple(inv_fact), tuple(pow2)


def multinomial_mod_p(p, t) -> FieldElement:
    """(p-1)! / (a! b! c! d! e! f!) mod p; exact since every argument is below p."""
    modulus = _as_modulus(p)
    p = modulus.p
    if len(t) != 6 or min(t) < 0 or sum(t) != p - 1:
        raise InconsistencyError(
            f"multinomial exponents {tuple(t)} must be 6 values summing to {p - 1}"
        )
    fact, inv_fact, _ = _factorial_tables(p)
    value = fact[p - 1]
    for part in t:
        value = value * inv_fact[part] % p
    return modulus(value)


def _coefficient_int(p: int, ev) -> int:
    fact, inv_fact, pow2 = _factorial_tables(p)
    top = fact[p - 1]
    total = 0
    for a, b, c, d, e, f in _iter_solutions(p, ev):
        term = top * inv_fact[a] % p * inv_fact[b] % p * inv_fact[c] % p
        term = term * inv_fact[d] % p * inv_fact[e] % p * inv_fact[f] % p
        total += pow2[c + d + f] * term
    return total % p


def coefficient_via_enumeration(p, ev) -> FieldElement:
    """Coefficient of x^i y^j z^k w^l in (QP)^(p-1), summed over S(i,j,k,l)."""
    modulus = _as_modulus(p)
    return modulus(_coefficient_int(modulus.p, tuple(ev)))


@lru_cache(maxsize=8)
def expanded_power(p: int) -> SparsePoly:
    """(QP)^(p-1) by literal expansion."""
    qp = curve_definition(p).qp()
    power = poly_pow(qp, p - 1)
    logger.debug("expanded (QP)^%d: %d terms", p - 1, len(power), extra={"p": p})
    return power


def coefficient_via_expansion(p, ev, gate: int = DEFAULT_EXPANSION_GATE) -> FieldElement:
    """Coefficient of x^i y^j z^k w^l read off the expanded (QP)^(p-1)."""
    modulus = _as_modulus(p)
    if modulus.p > gate:
        raise GateExceededError(
            "expansion of (QP)^(p-1)", modulus.p, gate, "SUPERSPECIAL_EXPANSION_GATE"
        )
    return expanded_power(modulus.p).coefficient(ev)


def is_superspecial(
    p, method: str = "enumeration", gate: Optional[int] = None
) -> SuperspecialReport:
    """Evaluate the 16 coefficients and decide superspeciality."""
    modulus = _as_modulus(p)
    _require_smooth(modulus.p, "is_superspecial")
    targets = target_monomials(modulus)

    if method == "enumeration":
        coefficient = coefficient_via_enumeration
    elif method == "expansion":
        def coefficient(m, ev):
            return coefficient_via_expansion(m, ev, gate or DEFAULT_EXPANSION_GATE)
    else:
        raise ValueError(f"unknown coefficient method {method!r}")

    entries = [
        CoefficientEntry(
            exponent=tuple(ev),
            monomial=ev.monomial(),
            coefficient=coefficient(modulus, ev).value,
        )
        for ev in targets.entries
    ]
    superspecial = not any(entry.coefficient for entry in entries)
    predicted = modulus.p % 3 == 2
    report = SuperspecialReport(
        p=modulus.p,
        coefficients=entries,
        superspecial=superspecial,
        predicted=predicted,
        agrees=superspecial == predicted,
    )
    if not report.agrees:
        logger.error(
            "criterion verdict contradicts p mod 3",
            extra={"p": modulus.p, "superspecial": superspecial},
        )
    return report
