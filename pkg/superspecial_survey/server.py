#!/usr/bin/env python3
"""
superspecial-survey MCP Server

Exposes the survey engines over MCP stdio.
Provides 6 tools: check, coeffs, count, table, density, verify.
"""

import asyncio
import json
import time
import traceback

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

from mcp.server import Server
from mcp.server.stdio import stdio_server
from mcp.types import Tool, TextContent

from .tools import CheckTool, CoeffsTool, CountTool, DensityTool, TableTool, VerifyTool
from .utils.analytics import log_tool_execution

TOOLS = {
    "check": CheckTool,
    "coeffs": CoeffsTool,
    "count": CountTool,
    "table": TableTool,
    "density": DensityTool,
    "verify": VerifyTool,
}

_PRIME = {
    "type": "integer",
    "description": "Odd prime p (the curve C_p: x^3+y^3+w^3 = 2yw+z^2 = 0 over F_p)."
}


class SuperspecialMCP:
    """Superspeciality and point-count survey MCP server"""

    def __init__(self):
        self.server = Server("superspecial-mcp")
        self.setup_tools()

    def setup_tools(self):
        """Register survey tools"""

        @self.server.list_tools()
        async def list_tools() -> list[Tool]:
            """List available tools."""
            return [
                Tool(
                    name="check",
                    description="Decide whether C_p is superspecial from the 16 target coefficients of (QP)^(p-1). Reports the p mod 3 prediction and whether it agrees. Requires p > 3.",
                    inputSchema={
                        "type": "object",
                        "properties": {
                            "p": _PRIME,
                            "method": {
                                "type": "string",
                                "enum": ["enumeration", "expansion"],
                                "description": "'enumeration' works for any p; 'expansion' expands (QP)^(p-1) literally and is gated to small p. Default: 'enumeration'",
                                "default": "enumeration"
                            }
                        },
                        "required": ["p"]
                    }
                ),
                Tool(
                    name="coeffs",
                    description="List the 16 (monomial, coefficient) pairs of (QP)^(p-1), row by row. Use 'both' to compare the two coefficient engines.",
                    inputSchema={
                        "type": "object",
                        "properties": {
                            "p": _PRIME,
                            "method": {
                                "type": "string",
                                "enum": ["enumeration", "expansion", "both"],
                                "default": "enumeration"
                            }
                        },
                        "required": ["p"]
                    }
                ),
                Tool(
                    name="count",
                    description="Count F_{p^2}-rational points of C_p and classify them against the Hasse-Weil bounds p^2+1 +/- 8p (maximal, minimal, neither; singular for p=3).",
                    inputSchema={
                        "type": "object",
                        "properties": {
                            "p": _PRIME,
                            "method": {
                                "type": "string",
                                "enum": ["fast", "brute", "both"],
                                "description": "'fast' sums over the conic; 'brute' scans P^3(F_{p^2}) and is gated to small p. Default: 'fast'",
                                "default": "fast"
                            }
                        },
                        "required": ["p"]
                    }
                ),
                Tool(
                    name="table",
                    description="Survey all primes in [min_p, max_p]: verdict, point count, bounds and classification per prime, rendered as CSV, JSON or Markdown.",
                    inputSchema={
                        "type": "object",
                        "properties": {
                            "min_p": {"type": "integer", "default": 3},
                            "max_p": {"type": "integer", "default": 269},
                            "with_counts": {"type": "boolean", "default": True},
                            "format": {
                                "type": "string",
                                "enum": ["csv", "json", "md"],
                                "default": "csv"
                            },
                            "paper_table": {
                                "type": "boolean",
                                "description": "Add a note column flagging rows that differ from the published table (p <= 97).",
                                "default": False
                            },
                            "cache": {
                                "type": "boolean",
                                "description": "Reuse and extend the on-disk survey cache.",
                                "default": False
                            },
                            "workers": {
                                "type": "integer",
                                "description": "Process-pool size; 1 runs serially. Default: SUPERSPECIAL_WORKERS"
                            }
                        }
                    }
                ),
                Tool(
                    name="density",
                    description="Share of primes 3 < p <= limit with p = 2 (mod 3), i.e. of superspecial C_p, with checkpoint ratios at 10^3, 10^4, 10^5.",
                    inputSchema={
                        "type": "object",
                        "properties": {
                            "limit": {"type": "integer", "description": "Upper bound, at least 5."}
                        },
                        "required": ["limit"]
                    }
                ),
                Tool(
                    name="verify",
                    description="Verify the smoothness certificate of C_p: the pure powers of x, y, z, w as combinations of P, Q and the Jacobian minors. For p=3 reports that all minors vanish.",
                    inputSchema={
                        "type": "object",
                        "properties": {"p": _PRIME},
                        "required": ["p"]
                    }
                )
            ]

        @self.server.call_tool()
        async def call_tool(name: str, arguments: dict) -> list[TextContent]:
            """Handle tool execution."""
            start_time = time.time()
            status = "success"
            error = None
            result = None

            try:
                tool_class = TOOLS.get(name)
                if tool_class is None:
                    error = f"Unknown tool: {name}"
                    status = "error"
                    result = json.dumps({"error": error})
                    return [TextContent(type="text", text=result)]

                result = await tool_class().execute(arguments or {})
                try:
                    result_data = json.loads(result)
                    if isinstance(result_data, dict) and "error" in result_data:
                        status = "error"
                        error = result_data["error"]
                except json.JSONDecodeError:
                    pass

                return [TextContent(type="text", text=result)]

            except Exception as e:
                status = "error"
                error = str(e)
                error_msg = {
                    "error": error,
                    "error_type": type(e).__name__,
                    "traceback": traceback.format_exc()
                }
                result = json.dumps(error_msg, indent=2)
                return [TextContent(type="text", text=result)]
            finally:
                duration_sec = time.time() - start_time
                try:
                    outputs = None
                    try:
                        if result:
                            outputs = json.loads(result)
                    except json.JSONDecodeError:
                        outputs = {"result_length": len(result)}

                    log_tool_execution(
                        tool_name=name,
                        status=status,
                        duration_sec=duration_sec,
                        inputs=arguments or {},
                        outputs=outputs,
                        error=error,
                        metadata={"surface": "mcp"}
                    )
                except Exception:
                    pass

    async def run(self):
        """Start the MCP server"""
        async with stdio_server() as (read_stream, write_stream):
            await self.server.run(
                read_stream,
                write_stream,
                self.server.create_initialization_options()
            )


def main():
    """Entry point for the MCP server"""
    server = SuperspecialMCP()
    asyncio.run(server.run())


if __name__ == "__main__":
    main()
