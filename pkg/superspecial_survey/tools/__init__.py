"""superspecial-survey tools."""

from .check import CheckTool
from .coeffs import CoeffsTool
from .count import CountTool
from .table import TableTool
from .density import DensityTool
from .verify import VerifyTool

__all__ = [
    "CheckTool",
    "CoeffsTool",
    "CountTool",
    "TableTool",
    "DensityTool",
    "VerifyTool"
]
