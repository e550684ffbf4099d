"""Table tool for superspecial-survey."""

import json
from typing import Any, Dict, List

from .. import __version__
from ..core.survey import FORMATS, SurveyRow, annotate_with_published, emit, run_survey_async
from ..utils.cache import SurveyCache
from ..utils.config import get_settings
from .check import error_payload


class TableTool:
    """Survey a range of primes and render the table."""

    def __init__(self):
        self.settings = get_settings()

    def _options(self, arguments: Dict[str, Any]) -> Dict[str, Any]:
        options = {
            "min_p": arguments.get("min_p", 3),
            "max_p": arguments.get("max_p", 269),
            "with_counts": arguments.get("with_counts", True),
            "format": arguments.get("format", "csv"),
            "paper_table": arguments.get("paper_table", False),
            "cache": arguments.get("cache", False),
            "workers": arguments.get("workers", self.settings.effective_workers()),
        }
        if options["format"] not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}")
        return options

    async def rows(self, options: Dict[str, Any]) -> List[SurveyRow]:
        cache = None
        if options["cache"]:
            cache = SurveyCache(self.settings.cache_file, __version__)
        rows = await run_survey_async(
            options["min_p"],
            options["max_p"],
            with_counts=options["with_counts"],
            workers=options["workers"],
            cache=cache,
            cube_table_limit=self.settings.cube_table_limit,
        )
        if options["paper_table"]:
            rows = annotate_with_published(rows)
        return rows

    async def execute(self, arguments: Dict[str, Any]) -> str:
        """
        Survey primes in [min_p, max_p].

        Args:
            min_p: Smallest prime considered (default 3)
            max_p: Largest prime considered (default 269)
            with_counts: Include point counts (default true)
            format: "csv" (default) | "json" | "md" for the rendered table
            paper_table: Add a note column comparing with the published table
            cache: Reuse and extend the on-disk survey cache
            workers: Process-pool size (1 = serial)

        Returns:
            JSON string with the rows and the rendered table
        """
        try:
            options = self._options(arguments)
            rows = await self.rows(options)
            include_note = options["paper_table"]
            return json.dumps({
                "min_p": options["min_p"],
                "max_p": options["max_p"],
                "row_count": len(rows),
                "rows": [row.as_record(include_note) for row in rows],
                "rendered": emit(rows, options["format"], include_note).decode("utf-8"),
            }, indent=2)
        except Exception as e:
            return error_payload(e)
