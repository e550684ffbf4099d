"""
Sparse polynomials over F_p in the variables x, y, z, w.

A polynomial is a map from exponent vectors (i, j, k, l) to nonzero
coefficients. Exponents are never reduced: this is arithmetic in
F_p[x, y, z, w], not in a coordinate ring.
"""

from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Tuple, Union

from ..errors import ModulusMismatchError
from .ff import FieldElement, PrimeModulus

VARIABLES = ("x", "y", "z", "w")

Scalar = Union[int, FieldElement]


class Exponent4(NamedTuple):
    """Exponents of x, y, z, w in a monomial."""

    i: int
    j: int
    k: int
    ell: int

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k + self.ell

    def monomial(self) -> str:
        """Render as x^i*y^j*z^k*w^l, dropping zero exponents."""
        factors = []
        for name, exponent in zip(VARIABLES, self):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        return "*".join(factors) if factors else "1"


def _check_exponent(ev) -> Tuple[int, int, int, int]:
    ev = tuple(ev)
    if len(ev) != 4 or any(not isinstance(e, int) or e < 0 for e in ev):
        raise ValueError(f"exponent vector must be four non-negative integers, got {ev!r}")
    return ev


class SparsePoly:
    """Immutable sparse polynomial in x, y, z, w over F_p.

    No stored coefficient is zero, so two polynomials are equal exactly when
    their term maps are equal.
    """

    __slots__ = ("modulus", "_terms")

    def __init__(
        self,
        modulus: PrimeModulus,
        terms: Optional[Mapping[Iterable[int], Scalar]] = None,
    ):
        self.modulus = modulus
        p = modulus.p
        canonical: Dict[Tuple[int, int, int, int], int] = {}
        for ev, coeff in (terms or {}).items():
            key = _check_exponent(ev)
            value = (canonical.get(key, 0) + int(coeff)) % p
            if value:
                canonical[key] = value
            else:
                canonical.pop(key, None)
        self._terms = canonical

    @classmethod
    def _from_canonical(cls, modulus: PrimeModulus, terms: Dict) -> "SparsePoly":
        poly = cls.__new__(cls)
        poly.modulus = modulus
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, modulus: PrimeModulus) -> "SparsePoly":
        return cls._from_canonical(modulus, {})

    @classmethod
    def constant(cls, modulus: PrimeModulus, value: Scalar) -> "SparsePoly":
        return cls(modulus, {(0, 0, 0, 0): value})

    @classmethod
    def monomial(
        cls, modulus: PrimeModulus, ev: Iterable[int], coeff: Scalar = 1
    ) -> "SparsePoly":
        return cls(modulus, {tuple(ev): coeff})

    @classmethod
    def variable(cls, modulus: PrimeModulus, name: str) -> "SparsePoly":
        ev = [0, 0, 0, 0]
        ev[VARIABLES.index(name)] = 1
        return cls.monomial(modulus, ev)

    def items(self) -> Iterator[Tuple[Exponent4, int]]:
        """(exponent, coefficient) pairs in lexicographic exponent order."""
        for ev in sorted(self._terms):
            yield Exponent4(*ev), self._terms[ev]

    @property
    def terms(self) -> Tuple[Tuple[Exponent4, FieldElement], ...]:
        return tuple((ev, self.modulus(c)) for ev, c in self.items())

    def coefficient(self, ev: Iterable[int]) -> FieldElement:
        return self.modulus(self._terms.get(tuple(ev), 0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(ev) for ev in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def _check_same_field(self, other: "SparsePoly"):
        if other.modulus.p != self.modulus.p:
            raise ModulusMismatchError(
                f"cannot combine polynomials over F_{self.modulus.p} and F_{other.modulus.p}"
            )

    def _lift(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            self._check_same_field(other)
            return other
        if isinstance(other, FieldElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatchError(
                    f"cannot scale by an F_{other.modulus.p} scalar over F_{self.modulus.p}"
                )
            return SparsePoly.constant(self.modulus, other)
        if isinstance(other, int):
            return SparsePoly.constant(self.modulus, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        p = self.modulus.p
        return SparsePoly._from_canonical(
            self.modulus, {ev: p - c for ev, c in self._terms.items()}
        )

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return poly_add(other, -self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SparsePoly":
        return poly_pow(self, exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self.modulus.p == other.modulus.p and self._terms == other._terms
        if isinstance(other, int):
            return self == SparsePoly.constant(self.modulus, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.modulus.p, frozenset(self._terms.items())))

    def render(self) -> str:
        """Human-readable form ``c*x^i*y^j*z^k*w^l + ...`` in lexicographic order."""
        if not self._terms:
            return "0"
        parts = []
        for ev, c in self.items():
            monomial = ev.monomial()
            parts.append(str(c) if monomial == "1" else f"{c}*{monomial}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SparsePoly(p={self.modulus.p}, {self.render()})"


def poly_add(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    f._check_same_field(g)
    p = f.modulus.p
    terms = dict(f._terms)
    for ev, c in g._terms.items():
        value = (terms.get(ev, 0) + c) % p
        if value:
            terms[ev] = value
        else:
            terms.pop(ev, None)
    return SparsePoly._from_canonical(f.modulus, terms)


def poly_mul(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    f._check_same_field(g)
    p = f.modulus.p
    acc: Dict[Tuple[int, int, int, int], int] = {}
    for (a0, a1, a2, a3), c in f._terms.items():
        for (b0, b1, b2, b3), d in g._terms.items():
            key = (a0 + b0, a1 + b1, a2 + b2, a3 + b3)
            acc[key] = acc.get(key, 0) + c * d
    terms = {ev: c % p for ev, c in acc.items() if c % p}
    return SparsePoly._from_canonical(f.modulus, terms)


def poly_pow(f: SparsePoly, e: int) -> SparsePoly:
    """f^e by binary exponentiation; f^0 = 1."""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    result = SparsePoly.constant(f.modulus, 1)
    base = f
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def coeff_of(f: SparsePoly, ev: Iterable[int]) -> FieldElement:
    """Coefficient of x^i y^j z^k w^l in f (zero when absent)."""
    return f.coefficient(ev)
