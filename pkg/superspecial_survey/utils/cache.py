"""
Survey cache.

Computed survey rows are appended as JSON lines to
$SUPERSPECIAL_HOME/survey-cache.jsonl, keyed by prime, package version and
whether point counts were included. Lines written by another version are
ignored.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Tuple

logger = logging.getLogger(__name__)

CacheKey = Tuple[int, bool]


class SurveyCache:
    """Append-only JSON lines store of survey rows."""

    def __init__(self, path: Path, version: str):
        self.path = Path(path)
        self.version = version
        self._entries: Optional[Dict[CacheKey, Dict[str, Any]]] = None

    def _load(self) -> Dict[CacheKey, Dict[str, Any]]:
        if self._entries is not None:
            return self._entries

        entries: Dict[CacheKey, Dict[str, Any]] = {}
        if self.path.exists():
            with open(self.path, 'r', encoding="utf-8") as f:
                for line in f:
                    if not line.strip():
                        continue
                    try:
                        entry = json.loads(line)
                    except json.JSONDecodeError:
                        logger.warning(f"Skipping corrupt cache line in {self.path}")
                        continue
                    if entry.get("version") != self.version:
                        continue
                    key = (entry["p"], bool(entry["with_counts"]))
                    entries[key] = entry["row"]
        self._entries = entries
        return entries

    def get(self, p: int, with_counts: bool) -> Optional[Dict[str, Any]]:
        row = self._load().get((p, with_counts))
        if row is not None:
            logger.debug("cache hit", extra={"p": p, "with_counts": with_counts})
        return row

    def put_many(self, rows: Iterable[Dict[str, Any]], with_counts: bool):
        entries = self._load()
        fresh = [row for row in rows if (row["p"], with_counts) not in entries]
        if not fresh:
            return

        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, 'a', encoding="utf-8") as f:
            for row in fresh:
                entry = {
                    "version": self.version,
                    "p": row["p"],
                    "with_counts": with_counts,
                    "row": row,
                }
                f.write(json.dumps(entry) + '\n')
                entries[(row["p"], with_counts)] = row
        logger.info(f"Cached {len(fresh)} survey rows in {self.path}")

    def __len__(self) -> int:
        return len(self._load())
