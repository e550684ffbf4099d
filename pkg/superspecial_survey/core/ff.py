"""
Finite field arithmetic.

Exact arithmetic in the prime field F_p and in its quadratic extension
F_{p^2} = F_p[t] / (t^2 - n), where n is the smallest positive quadratic
nonresidue mod p. Besides the scalar element types, ``ExtField`` offers
numpy-vectorized helpers used by the point counters: an element of F_{p^2}
is then carried as a pair of int64 arrays (a0, a1), or encoded as the single
index a0 + a1 * p.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Tuple, Union

import numpy as np
from sympy import isprime
from sympy.ntheory.residue_ntheory import is_quad_residue

from ..errors import InvalidModulusError, ModulusMismatchError

DEFAULT_MAX_PRIME = 1_000_000

ArrayPair = Tuple[np.ndarray, np.ndarray]


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime characteristic p."""

    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise InvalidModulusError(f"p must be an integer, got {self.p!r}")
        if self.p <= 2:
            raise InvalidModulusError(f"characteristic must be an odd prime, got p={self.p}")
        if not isprime(self.p):
            raise InvalidModulusError(f"p={self.p} is not prime")

    @classmethod
    def checked(cls, p: int, max_prime: int = DEFAULT_MAX_PRIME) -> "PrimeModulus":
        """Build a modulus, also enforcing the configured size bound."""
        if isinstance(p, int) and p > max_prime:
            raise InvalidModulusError(
                f"p={p} exceeds the configured bound {max_prime} (SUPERSPECIAL_MAX_PRIME)"
            )
        return cls(p)

    @property
    def q(self) -> int:
        return self.p * self.p

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)


@dataclass(frozen=True)
class FieldElement:
    """Element of F_p, stored as its representative in [0, p)."""

    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            object.__setattr__(self, "value", self.value % self.modulus.p)

    def _coerce(self, other: Union["FieldElement", int]) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatchError(
                    f"cannot combine elements of F_{self.modulus.p} and F_{other.modulus.p}"
                )
            return other
        if isinstance(other, int):
            return self.modulus(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value + other.value) % self.modulus.p, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement((self.value - other.value) % self.modulus.p, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value * other.value % self.modulus.p, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value % self.modulus.p, self.modulus)

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.modulus.p), self.modulus)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.modulus.p}")
        return FieldElement(pow(self.value, -1, self.modulus.p), self.modulus)

    def is_square(self) -> bool:
        return self.value == 0 or is_quad_residue(self.value, self.modulus.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.modulus.p == other.modulus.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.value}, p={self.modulus.p})"

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class ExtElement:
    """Element a0 + a1*t of F_{p^2}, where t^2 = nonresidue."""

    a0: FieldElement
    a1: FieldElement
    nonresidue: FieldElement

    @property
    def modulus(self) -> PrimeModulus:
        return self.a0.modulus

    def _coerce(self, other) -> "ExtElement":
        if isinstance(other, ExtElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatchError(
                    f"cannot combine elements of F_{self.modulus.q} and F_{other.modulus.q}"
                )
            return other
        if isinstance(other, (int, FieldElement)):
            return ExtElement(self.a0._coerce(other), self.modulus.zero, self.nonresidue)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExtElement(self.a0 + other.a0, self.a1 + other.a1, self.nonresidue)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExtElement(self.a0 - other.a0, self.a1 - other.a1, self.nonresidue)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # (a0 + a1 t)(b0 + b1 t) = a0 b0 + n a1 b1 + (a0 b1 + a1 b0) t
        return ExtElement(
            self.a0 * other.a0 + self.nonresidue * self.a1 * other.a1,
            self.a0 * other.a1 + self.a1 * other.a0,
            self.nonresidue,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "ExtElement":
        return ExtElement(-self.a0, -self.a1, self.nonresidue)

    def __pow__(self, exponent: int) -> "ExtElement":
        if exponent < 0:
            return ext_pow(self.inverse(), -exponent)
        return ext_pow(self, exponent)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def norm(self) -> FieldElement:
        """N(v) = v * v^p = a0^2 - n a1^2."""
        return self.a0 * self.a0 - self.nonresidue * self.a1 * self.a1

    def conjugate(self) -> "ExtElement":
        return ExtElement(self.a0, -self.a1, self.nonresidue)

    def frobenius(self) -> "ExtElement":
        """v -> v^p, which on F_{p^2} is conjugation t -> -t."""
        return self.conjugate()

    def inverse(self) -> "ExtElement":
        norm = self.norm()
        if not norm:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.modulus.q}")
        inv = norm.inverse()
        return ExtElement(self.a0 * inv, -self.a1 * inv, self.nonresidue)

    def is_zero(self) -> bool:
        return not self.a0 and not self.a1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, FieldElement)):
            return self.a0 == other and not self.a1
        if isinstance(other, ExtElement):
            return (
                self.modulus.p == other.modulus.p
                and self.a0.value == other.a0.value
                and self.a1.value == other.a1.value
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a0.value, self.a1.value, self.modulus.p))

    def __repr__(self) -> str:
        return f"ExtElement({self.a0.value} + {self.a1.value}*t, p={self.modulus.p})"


@lru_cache(maxsize=None)
def smallest_nonresidue(p: int) -> int:
    """Smallest positive quadratic nonresidue mod p (Euler's criterion scan)."""
    for n in range(2, p):
        if not is_quad_residue(n, p):
            return n
    raise InvalidModulusError(f"no quadratic nonresidue mod {p}")


@dataclass(frozen=True)
class ExtField:
    """The field F_{p^2}, carrying p, q = p^2 and the chosen nonresidue."""

    modulus: PrimeModulus
    nonresidue: int

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def q(self) -> int:
        return self.modulus.q

    def __call__(self, a0: int, a1: int = 0) -> ExtElement:
        return ExtElement(self.modulus(a0), self.modulus(a1), self.modulus(self.nonresidue))

    @property
    def zero(self) -> ExtElement:
        return self(0)

    @property
    def one(self) -> ExtElement:
        return self(1)

    def from_index(self, index: int) -> ExtElement:
        return self(index % self.p, index // self.p)

    def index(self, v: ExtElement) -> int:
        return v.a0.value + v.a1.value * self.p

    def elements(self) -> Iterator[ExtElement]:
        """All q elements, in index order."""
        for index in range(self.q):
            yield self.from_index(index)

    # Vectorized arithmetic on (a0, a1) array pairs

    def index_arrays(self, start: int = 0, stop: Optional[int] = None) -> ArrayPair:
        """Elements with index in [start, stop) as arrays; by default all of F_{p^2}."""
        idx = np.arange(start, self.q if stop is None else stop, dtype=np.int64)
        return idx % self.p, idx // self.p

    def vmul(self, a: ArrayPair, b: ArrayPair) -> ArrayPair:
        p = self.p
        a0, a1 = a
        b0, b1 = b
        # intermediate products stay below 2p^2 < 2^63 for p <= 10^6
        c0 = (a0 * b0 % p + self.nonresidue * (a1 * b1 % p)) % p
        c1 = (a0 * b1 + a1 * b0) % p
        return c0, c1

    def vpow(self, a: ArrayPair, exponent: int) -> ArrayPair:
        a0, a1 = a
        result = (np.ones_like(a0), np.zeros_like(a1))
        base = (a0, a1)
        while exponent:
            if exponent & 1:
                result = self.vmul(result, base)
            exponent >>= 1
            if exponent:
                base = self.vmul(base, base)
        return result

    def vcube(self, a: ArrayPair) -> ArrayPair:
        return self.vmul(self.vmul(a, a), a)

    def cube_table(self) -> np.ndarray:
        """Boolean table over element indices marking the cubes of F_{p^2}."""
        cubes = self.vcube(self.index_arrays())
        table = np.zeros(self.q, dtype=bool)
        table[cubes[0] + cubes[1] * self.p] = True
        return table

    def vcube_root_count(self, a: ArrayPair, table: Optional[np.ndarray] = None) -> np.ndarray:
        """Number of cube roots of each element of ``a``; see ``cube_root_count``."""
        a0, a1 = a
        zero = (a0 == 0) & (a1 == 0)
        if (self.q - 1) % 3 != 0:
            return np.ones(a0.shape, dtype=np.int64)
        if table is not None:
            is_cube = table[a0 + a1 * self.p]
        else:
            c0, c1 = self.vpow(a, (self.q - 1) // 3)
            is_cube = (c0 == 1) & (c1 == 0)
        return np.where(zero, 1, np.where(is_cube, 3, 0)).astype(np.int64)


def make_ext_field(p: Union[PrimeModulus, int]) -> ExtField:
    """Build F_{p^2} over the smallest positive quadratic nonresidue."""
    modulus = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
    return ExtField(modulus, smallest_nonresidue(modulus.p))


def ext_pow(v: ExtElement, e: int) -> ExtElement:
    """v^e by square-and-multiply; v^0 = 1, also for v = 0."""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    one = ExtElement(v.modulus.one, v.modulus.zero, v.nonresidue)
    result = one
    base = v
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def cube_root_count(a: ExtElement) -> int:
    """#{x in F_{p^2} : x^3 = a}."""
    if a.is_zero():
        return 1
    q = a.modulus.q
    if (q - 1) % 3 != 0:
        # p = 3: cubing is the Frobenius map, a bijection
        return 1
    return 3 if ext_pow(a, (q - 1) // 3) == 1 else 0
