"""
Integration tests for server tool dispatch and logging.
"""

import pytest
import json

from mcp import types

from superspecial_survey.server import SuperspecialMCP, TOOLS
from superspecial_survey.utils.analytics import get_execution_history


async def call(server: SuperspecialMCP, name: str, arguments: dict) -> dict:
    handler = server.server.request_handlers[types.CallToolRequest]
    request = types.CallToolRequest(
        method="tools/call",
        params=types.CallToolRequestParams(name=name, arguments=arguments),
    )
    result = await handler(request)
    return json.loads(result.root.content[0].text)


class TestServerLogging:
    """Tests for server-level tool execution and logging."""

    @pytest.mark.integration
    async def test_lists_all_tools(self):
        """Test that the server lists all six tools."""
        server = SuperspecialMCP()
        handler = server.server.request_handlers[types.ListToolsRequest]

        result = await handler(types.ListToolsRequest(method="tools/list"))

        assert [tool.name for tool in result.root.tools] == list(TOOLS)

    @pytest.mark.integration
    async def test_server_logs_tool_execution(self, history_file):
        """Test that the server logs tool executions automatically."""
        server = SuperspecialMCP()

        result = await call(server, "count", {"p": 5})

        assert result["count"] == 66
        assert history_file.exists()
        entry = get_execution_history(days=1)[0]
        assert entry["tool"] == "count"
        assert entry["status"] == "success"
        assert entry["inputs"]["p"] == 5
        assert entry["outputs"]["count"] == 66
        assert entry["metadata"]["surface"] == "mcp"
        assert "duration_sec" in entry

    @pytest.mark.integration
    async def test_server_logs_tool_errors(self, history_file):
        """Errors reported by a tool are logged with status error."""
        server = SuperspecialMCP()

        result = await call(server, "check", {"p": 3})

        assert result["error_type"] == "SingularCharacteristicError"
        entry = get_execution_history(days=1, tool_name="check")[0]
        assert entry["status"] == "error"
        assert "p > 3" in entry["error"]

    @pytest.mark.integration
    async def test_unknown_tool(self, history_file):
        """Test calling an unknown tool."""
        server = SuperspecialMCP()

        result = await call(server, "search", {"query": "x"})

        assert "Unknown tool" in result["error"]
        assert get_execution_history(days=1)[0]["status"] == "error"
