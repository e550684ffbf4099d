"""
Survey driver.

Runs the superspeciality criterion and the point counter over a range of
primes, scans the density of superspecial primes, and serializes survey
rows as CSV, JSON or Markdown.
"""

import asyncio
import csv
import io
import json
import logging
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Dict, List, NamedTuple, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_serializer
from sympy import sieve

from ..errors import InconsistencyError, InvalidRangeError
from ..utils.cache import SurveyCache
from .counting import (
    DEFAULT_CUBE_TABLE_LIMIT,
    GENUS,
    Classification,
    CountMethod,
    count_points,
)
from .hassewitt import is_superspecial

logger = logging.getLogger(__name__)

FIELDS = (
    "p",
    "p_mod_3",
    "superspecial",
    "count_fp2",
    "classification",
    "hw_upper",
    "hw_lower",
)
NOTE_FIELD = "note"
FORMATS = ("csv", "json", "md")
DENSITY_CHECKPOINTS = (10**3, 10**4, 10**5)


class SurveyRow(BaseModel):
    """One prime of the survey table."""

    p: int
    p_mod_3: int
    superspecial: bool
    count: Optional[int] = None
    classification: Optional[Classification] = None
    hw_upper: int
    hw_lower: int
    note: Optional[str] = None

    def as_record(self, include_note: bool = False) -> Dict[str, Any]:
        """Row as an ordered mapping with the published column names."""
        record = {
            "p": self.p,
            "p_mod_3": self.p_mod_3,
            "superspecial": self.superspecial,
            "count_fp2": self.count,
            "classification": self.classification.value if self.classification else None,
            "hw_upper": self.hw_upper,
            "hw_lower": self.hw_lower,
        }
        if include_note:
            record[NOTE_FIELD] = self.note or ""
        return record


class PublishedRow(NamedTuple):
    superspecial: bool
    count: int
    maximal_mark: bool


# Rows as printed in the published point-count table. p = 37 is printed as
# superspecial although 37 = 1 (mod 3), and with 1334 points where the curve
# has 1344.
PUBLISHED_TABLE: Dict[int, PublishedRow] = {
    3: PublishedRow(False, 10, False),
    5: PublishedRow(True, 66, True),
    7: PublishedRow(False, 48, False),
    11: PublishedRow(True, 210, True),
    13: PublishedRow(False, 192, False),
    17: PublishedRow(True, 426, True),
    19: PublishedRow(False, 336, False),
    23: PublishedRow(True, 714, True),
    29: PublishedRow(True, 1074, True),
    31: PublishedRow(False, 1146, False),
    37: PublishedRow(True, 1334, False),
    41: PublishedRow(True, 2010, True),
    43: PublishedRow(False, 1938, False),
    47: PublishedRow(True, 2586, True),
    53: PublishedRow(True, 3234, True),
    59: PublishedRow(True, 3954, True),
    61: PublishedRow(False, 3648, False),
    67: PublishedRow(False, 4368, False),
    71: PublishedRow(True, 5610, True),
    73: PublishedRow(False, 5376, False),
    79: PublishedRow(False, 6384, False),
    83: PublishedRow(True, 7554, True),
    89: PublishedRow(True, 8634, True),
    97: PublishedRow(False, 9408, False),
}


def _validate_range(min_p: int, max_p: int):
    if not isinstance(min_p, int) or not isinstance(max_p, int):
        raise InvalidRangeError(f"survey bounds must be integers, got {min_p!r}..{max_p!r}")
    if min_p < 3:
        raise InvalidRangeError(f"survey must start at p >= 3, got min_p={min_p}")
    if max_p < min_p:
        raise InvalidRangeError(f"empty survey range: max_p={max_p} < min_p={min_p}")


def survey_primes(min_p: int, max_p: int) -> List[int]:
    _validate_range(min_p, max_p)
    return [int(p) for p in sieve.primerange(min_p, max_p + 1)]


def compute_row(
    p: int, with_counts: bool, cube_table_limit: int = DEFAULT_CUBE_TABLE_LIMIT
) -> Dict[str, Any]:
    """Survey row for one prime, as a plain dict so it crosses process boundaries."""
    q = p * p
    width = 2 * GENUS * p
    row: Dict[str, Any] = {
        "p": p,
        "p_mod_3": p % 3,
        "superspecial": False,
        "count": None,
        "classification": None,
        "hw_upper": q + 1 + width,
        "hw_lower": q + 1 - width,
    }

    if p > 3:
        report = is_superspecial(p)
        if not report.agrees:
            raise InconsistencyError(
                f"criterion says superspecial={report.superspecial} for p={p} = {p % 3} (mod 3)"
            )
        row["superspecial"] = report.superspecial

    if with_counts:
        record = count_points(p, CountMethod.FAST, cube_table_limit=cube_table_limit)
        row["count"] = record.count
        row["classification"] = record.classification.value
    elif p == 3:
        row["classification"] = Classification.SINGULAR.value
    return row


async def run_survey_async(
    min_p: int,
    max_p: int,
    with_counts: bool = True,
    workers: int = 1,
    cache: Optional[SurveyCache] = None,
    cube_table_limit: int = DEFAULT_CUBE_TABLE_LIMIT,
) -> List[SurveyRow]:
    """Survey every prime in [min_p, max_p], fanning out across a process pool."""
    primes = survey_primes(min_p, max_p)

    rows: Dict[int, Dict[str, Any]] = {}
    pending = []
    for p in primes:
        cached = cache.get(p, with_counts) if cache is not None else None
        if cached is not None:
            rows[p] = cached
        else:
            pending.append(p)
    logger.debug(
        "survey plan",
        extra={"primes": len(primes), "cached": len(rows), "workers": workers},
    )

    if pending and workers > 1:
        loop = asyncio.get_running_loop()
        context = multiprocessing.get_context("spawn")
        with ProcessPoolExecutor(max_workers=workers, mp_context=context) as pool:
            futures = [
                loop.run_in_executor(pool, compute_row, p, with_counts, cube_table_limit)
                for p in pending
            ]
            fresh = await asyncio.gather(*futures)
    else:
        fresh = [compute_row(p, with_counts, cube_table_limit) for p in pending]

    for row in fresh:
        rows[row["p"]] = row
    if cache is not None and fresh:
        cache.put_many(fresh, with_counts)

    return [SurveyRow.model_validate(rows[p]) for p in sorted(rows)]


def run_survey(
    min_p: int,
    max_p: int,
    with_counts: bool = True,
    workers: int = 1,
    cache: Optional[SurveyCache] = None,
    cube_table_limit: int = DEFAULT_CUBE_TABLE_LIMIT,
) -> List[SurveyRow]:
    """Blocking wrapper around run_survey_async."""
    return asyncio.run(
        run_survey_async(min_p, max_p, with_counts, workers, cache, cube_table_limit)
    )


def annotate_with_published(rows: Sequence[SurveyRow]) -> List[SurveyRow]:
    """Attach a note to each row whose printed counterpart disagrees with it."""
    annotated = []
    for row in rows:
        printed = PUBLISHED_TABLE.get(row.p)
        problems = []
        if printed is not None:
            if printed.superspecial != row.superspecial:
                verdict = "S.sp." if printed.superspecial else "Not S.sp."
                problems.append(f"printed verdict {verdict} differs from computed")
            if row.count is not None and printed.count != row.count:
                problems.append(f"printed count {printed.count} differs from computed")
            maximal = row.classification is Classification.MAXIMAL
            if row.count is not None and printed.maximal_mark != maximal:
                problems.append("printed (Max.) mark differs from computed")
        note = "; ".join(problems)
        if note:
            logger.warning(f"p={row.p}: {note}")
        annotated.append(row.model_copy(update={"note": note}))
    return annotated


def _csv_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit_csv(rows: Sequence[SurveyRow], include_note: bool) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = list(FIELDS) + ([NOTE_FIELD] if include_note else [])
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_value(v) for v in row.as_record(include_note).values()])
    return buffer.getvalue()


def _emit_json(rows: Sequence[SurveyRow], include_note: bool) -> str:
    return json.dumps([row.as_record(include_note) for row in rows], indent=2) + "\n"


def _md_verdict(row: SurveyRow) -> str:
    if row.p == 3:
        return "Not S.sp. (singular)"
    return "S.sp." if row.superspecial else "Not S.sp."


def _md_count(row: SurveyRow) -> str:
    if row.count is None:
        return "-"
    if row.classification is Classification.MAXIMAL:
        return f"{row.count} (Max.)"
    if row.classification is Classification.MINIMAL:
        return f"{row.count} (Min.)"
    return str(row.count)


def _emit_md(rows: Sequence[SurveyRow], include_note: bool) -> str:
    header = ["p", "p mod 3", "S.sp. or not", "#C_p(F_{p^2})"]
    if include_note:
        header.append(NOTE_FIELD)
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    for row in rows:
        cells = [str(row.p), str(row.p_mod_3), _md_verdict(row), _md_count(row)]
        if include_note:
            cells.append(row.note or "")
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def emit(rows: Sequence[SurveyRow], format: str = "csv", include_note: bool = False) -> bytes:
    """Serialize rows deterministically; equal input gives byte-identical output."""
    if format == "csv":
        text = _emit_csv(rows, include_note)
    elif format == "json":
        text = _emit_json(rows, include_note)
    elif format == "md":
        text = _emit_md(rows, include_note)
    else:
        raise ValueError(f"unknown format {format!r}; expected one of {', '.join(FORMATS)}")
    return text.encode("utf-8")


class DensityCheckpoint(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    limit: int
    primes_considered: int
    superspecial_count: int
    ratio: Fraction

    @field_serializer("ratio")
    def _serialize_ratio(self, ratio: Fraction) -> str:
        return f"{ratio.numerator}/{ratio.denominator}"


class DensityReport(BaseModel):
    """Share of primes 3 < p <= limit with p = 2 (mod 3)."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    limit: int
    primes_considered: int
    superspecial_count: int
    ratio: Fraction
    expected: Fraction = Fraction(1, 2)
    checkpoints: List[DensityCheckpoint] = Field(default_factory=list)

    @field_serializer("ratio", "expected")
    def _serialize_fraction(self, value: Fraction) -> str:
        return f"{value.numerator}/{value.denominator}"

    @property
    def deviation(self) -> float:
        return abs(float(self.ratio) - float(self.expected))


def density_scan(limit: int) -> DensityReport:
    """Count primes 5 <= p <= limit by residue mod 3 with one sieve pass."""
    if not isinstance(limit, int) or limit < 5:
        raise InvalidRangeError(f"density limit must be an integer >= 5, got {limit!r}")

    marks = [n for n in DENSITY_CHECKPOINTS if n <= limit]
    checkpoints = []
    considered = 0
    superspecial = 0
    for p in sieve.primerange(5, limit + 1):
        while marks and p > marks[0]:
            checkpoints.append(_checkpoint(marks.pop(0), considered, superspecial))
        considered += 1
        if p % 3 == 2:
            superspecial += 1
    for mark in marks:
        checkpoints.append(_checkpoint(mark, considered, superspecial))

    report = DensityReport(
        limit=limit,
        primes_considered=considered,
        superspecial_count=superspecial,
        ratio=Fraction(superspecial, considered),
        checkpoints=checkpoints,
    )
    logger.debug("density scan", extra={"limit": limit, "primes": considered})
    return report


def _checkpoint(limit: int, considered: int, superspecial: int) -> DensityCheckpoint:
    return DensityCheckpoint(
        limit=limit,
        primes_considered=considered,
        superspecial_count=superspecial,
        ratio=Fraction(superspecial, considered),
    )
