"""
Counting F_{p^2}-rational points on C_p and Hasse-Weil classification.

The quadric Q = 2yw + z^2 does not involve x, so it is a cone over the
plane conic 2yw + z^2 = 0 with vertex (1:0:0:0), which is not on C_p. Each
of the q + 1 conic points (y:z:w), taken with a fixed representative,
lifts to the curve points (x:y:z:w) with x^3 = -(y^3 + w^3), so

    #C_p(F_q) = sum over conic points of #{x : x^3 = -(y^3 + w^3)}.

The conic is parametrized by (1:0:0) and (-t^2/2 : t : 1), t in F_q.
"""

import logging
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel

from ..errors import GateExceededError, InconsistencyError
from .ff import ExtField, PrimeModulus, make_ext_field

logger = logging.getLogger(__name__)

GENUS = 4
DEFAULT_BRUTE_GATE = 13
DEFAULT_CUBE_TABLE_LIMIT = 1_000_000
DEFAULT_CHUNK_SIZE = 1 << 20


class Classification(str, Enum):
    MAXIMAL = "maximal"
    MINIMAL = "minimal"
    NEITHER = "neither"
    SINGULAR = "singular"


class CountMethod(str, Enum):
    FAST = "fast"
    BRUTE = "brute"


class PointCountRecord(BaseModel):
    """#C_p(F_{p^2}) together with the Hasse-Weil interval."""

    p: int
    q: int
    count: int
    hw_upper: int
    hw_lower: int
    classification: Optional[Classification] = None
    method: CountMethod

    @classmethod
    def build(cls, p: int, count: int, method: CountMethod) -> "PointCountRecord":
        q = p * p
        # 2g * sqrt(q) = 8p for g = 4
        width = 2 * GENUS * p
        return cls(
            p=p,
            q=q,
            count=count,
            hw_upper=q + 1 + width,
            hw_lower=q + 1 - width,
            method=method,
        )

    @property
    def max_label(self) -> str:
        """Count as printed in the survey table, e.g. ``66 (Max.)``."""
        if self.classification is Classification.MAXIMAL:
            return f"{self.count} (Max.)"
        if self.classification is Classification.MINIMAL:
            return f"{self.count} (Min.)"
        return str(self.count)


def _as_modulus(p) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


def classify(record: PointCountRecord) -> PointCountRecord:
    """Fill in the classification by exact comparison with the bounds."""
    if record.p <= 3:
        # The variety is singular, so the bounds for smooth curves do not apply
        classification = Classification.SINGULAR
    elif not record.hw_lower <= record.count <= record.hw_upper:
        raise InconsistencyError(
            f"#C_{record.p}(F_{record.q}) = {record.count} lies outside the Hasse-Weil "
            f"interval [{record.hw_lower}, {record.hw_upper}] of a smooth genus-4 curve"
        )
    elif record.count == record.hw_upper:
        classification = Classification.MAXIMAL
    elif record.count == record.hw_lower:
        classification = Classification.MINIMAL
    else:
        classification = Classification.NEITHER
    return record.model_copy(update={"classification": classification})


def affine_conic_points(
    field: ExtField, start: int, stop: int
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(y, w) of the conic points (-t^2/2 : t : 1) for t with index in [start, stop)."""
    p = field.p
    t = field.index_arrays(start, stop)
    t_sq = field.vmul(t, t)
    neg_half = (-pow(2, -1, p)) % p
    size = stop - start
    return (
        t_sq[0] * neg_half % p,
        t_sq[1] * neg_half % p,
        np.ones(size, dtype=np.int64),
        np.zeros(size, dtype=np.int64),
    )


def conic_points(field: ExtField) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Representatives (y, w) of the q + 1 points of 2yw + z^2 = 0, as array pairs.

    Returns y0, y1, w0, w1. The first entry is (1:0:0); the rest are
    (-t^2/2 : t : 1) in index order of t. The z coordinate is not needed
    for counting.
    """
    y0, y1, w0, w1 = affine_conic_points(field, 0, field.q)
    return (
        np.concatenate(([1], y0)).astype(np.int64),
        np.concatenate(([0], y1)).astype(np.int64),
        np.concatenate(([0], w0)).astype(np.int64),
        np.concatenate(([0], w1)).astype(np.int64),
    )


def _cube_root_total(field: ExtField, y, w, table: Optional[np.ndarray]) -> int:
    """Sum of #{x : x^3 = -(y^3 + w^3)} over the given (y, w) pairs."""
    y3 = field.vcube(y)
    w3 = field.vcube(w)
    a = ((-(y3[0] + w3[0])) % field.p, (-(y3[1] + w3[1])) % field.p)
    return int(field.vcube_root_count(a, table).sum())


def count_points_fast(
    p: Union[PrimeModulus, int],
    cube_table_limit: int = DEFAULT_CUBE_TABLE_LIMIT,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> PointCountRecord:
    """Count by summing cube-root counts over the conic, O(q).

    The parameters t run through F_{p^2} in chunks of ``chunk_size``, and
    the per-chunk sums are added up, so memory use does not grow with q.
    """
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be at least 1, got {chunk_size}")
    modulus = _as_modulus(p)
    field = make_ext_field(modulus)

    table = None
    if (field.q - 1) % 3 == 0 and field.q <= cube_table_limit:
        table = field.cube_table()
        logger.debug("built cube table", extra={"p": field.p, "q": field.q})

    one = (np.ones(1, dtype=np.int64), np.zeros(1, dtype=np.int64))
    zero = (np.zeros(1, dtype=np.int64), np.zeros(1, dtype=np.int64))
    # (1:0:0)
    count = _cube_root_total(field, one, zero, table)
    for start in range(0, field.q, chunk_size):
        stop = min(start + chunk_size, field.q)
        y0, y1, w0, w1 = affine_conic_points(field, start, stop)
        count += _cube_root_total(field, (y0, y1), (w0, w1), table)

    logger.debug("fast count", extra={"p": field.p, "count": count})
    return classify(PointCountRecord.build(field.p, count, CountMethod.FAST))


def _count_common_zeros(field: ExtField, x, y, z, w) -> int:
    """Number of positions where Q = 2yw + z^2 and P = x^3 + y^3 + w^3 both vanish."""
    p = field.p
    yw = field.vmul(y, w)
    zz = field.vmul(z, z)
    q0 = (2 * yw[0] + zz[0]) % p
    q1 = (2 * yw[1] + zz[1]) % p
    x3, y3, w3 = field.vcube(x), field.vcube(y), field.vcube(w)
    p0 = (x3[0] + y3[0] + w3[0]) % p
    p1 = (x3[1] + y3[1] + w3[1]) % p
    return int(np.count_nonzero((q0 == 0) & (q1 == 0) & (p0 == 0) & (p1 == 0)))


def count_points_brute(
    p: Union[PrimeModulus, int], gate: int = DEFAULT_BRUTE_GATE
) -> PointCountRecord:
    """Count by testing every point of P^3(F_{p^2}).

    Points are normalized so the first nonzero coordinate is 1. Each slice
    with a fixed leading coordinate is evaluated as one numpy batch.
    """
    modulus = _as_modulus(p)
    if modulus.p > gate:
        raise GateExceededError(
            "brute-force point count", modulus.p, gate, "SUPERSPECIAL_BRUTE_GATE"
        )
    field = make_ext_field(modulus)
    q = field.q

    everything = field.index_arrays()
    # all pairs (u, v) in F_q^2, u varying slowest
    u = (np.repeat(everything[0], q), np.repeat(everything[1], q))
    v = (np.tile(everything[0], q), np.tile(everything[1], q))

    def const(value: int, size: int):
        return np.full(size, value, dtype=np.int64), np.zeros(size, dtype=np.int64)

    pairs = q * q
    count = 0
    # (1 : y : z : w)
    one = const(1, pairs)
    for index in range(q):
        y = (
            np.full(pairs, index % field.p, dtype=np.int64),
            np.full(pairs, index // field.p, dtype=np.int64),
        )
        count += _count_common_zeros(field, one, y, u, v)
    # (0 : 1 : z : w)
    count += _count_common_zeros(field, const(0, pairs), const(1, pairs), u, v)
    # (0 : 0 : 1 : w)
    count += _count_common_zeros(field, const(0, q), const(0, q), const(1, q), everything)
    # (0 : 0 : 0 : 1)
    count += _count_common_zeros(field, const(0, 1), const(0, 1), const(0, 1), const(1, 1))

    logger.debug("brute count", extra={"p": field.p, "count": count})
    return classify(PointCountRecord.build(field.p, count, CountMethod.BRUTE))


def count_points(
    p,
    method: Union[CountMethod, str] = CountMethod.FAST,
    brute_gate: int = DEFAULT_BRUTE_GATE,
    cube_table_limit: int = DEFAULT_CUBE_TABLE_LIMIT,
) -> PointCountRecord:
    method = CountMethod(method)
    if method is CountMethod.BRUTE:
        return count_points_brute(p, gate=brute_gate)
    return count_points_fast(p, cube_table_limit=cube_table_limit)

