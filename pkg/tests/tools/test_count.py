"""
Tests for count tool.
"""

import pytest
import json

from superspecial_survey.tools.count import CountTool


class TestCountTool:
    """Tests for CountTool."""

    @pytest.mark.asyncio
    @pytest.mark.tools
    async def test_fast_count(self):
        """Test the fast count."""
        tool = CountTool()

        result = await tool.execute({"p": 5})

        result_data = json.loads(result)
        assert result_data["count"] == 66
        assert result_data["classification"] == "maximal"
        assert result_data["label"] == "66 (Max.)"
        assert result_data["method"] == "fast"
        assert result_data["hw_upper"] == 66

    @pytest.mark.asyncio
    @pytest.mark.tools
    @pytest.mark.oracle
    async def test_both_methods(self):
        """Test fast and brute counts together."""
        tool = CountTool()

        result = await tool.execute({"p": 7, "method": "both"})

        result_data = json.loads(result)
        assert result_data["agrees"] is True
        assert result_data["fast"]["count"] == result_data["brute"]["count"] == 48

    @pytest.mark.asyncio
    @pytest.mark.tools
    async def test_singular_prime(self):
        """Test counting for p = 3."""
        tool = CountTool()

        result = await tool.execute({"p": 3})

        result_data = json.loads(result)
        assert result_data["count"] == 10
        assert result_data["classification"] == "singular"

    @pytest.mark.asyncio
    @pytest.mark.tools
    async def test_brute_gate(self):
        """Test that the brute gate is reported."""
        tool = CountTool()

        result = await tool.execute({"p": 17, "method": "brute"})

        assert json.loads(result)["error_type"] == "GateExceededError"
