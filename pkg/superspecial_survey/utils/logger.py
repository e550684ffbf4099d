"""
Logger
Stderr logging for superspecial-survey.
"""

import logging
import sys

ROOT_LOGGER = "superspecial_survey"


class Logger:
    """Configures the package root logger.

    Every engine module logs through ``logging.getLogger(__name__)``, so
    configuring the package root here covers the whole tree.
    """

    def __init__(self, name: str = ROOT_LOGGER, level: str = "WARNING"):
        self.logger = logging.getLogger(name)
        self.set_level(level)

        # Only add handler if none exist
        if not self.logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            formatter = logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
            )
            handler.setFormatter(formatter)
            self.logger.addHandler(handler)

    def set_level(self, level: str):
        self.logger.setLevel(getattr(logging, level.upper(), logging.WARNING))

