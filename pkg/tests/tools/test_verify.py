"""
Tests for verify tool.
"""

import pytest
import json

from superspecial_survey.tools.verify import VerifyTool


class TestVerifyTool:
    """Tests for VerifyTool."""

    @pytest.mark.asyncio
    @pytest.mark.tools
    async def test_certificate(self):
        """Test the certificate report."""
        tool = VerifyTool()

        result = await tool.execute({"p": 5})

        result_data = json.loads(result)
        assert result_data["verified"] is True
        assert result_data["singular"] is False
        assert len(result_data["identities"]) == 4

    @pytest.mark.asyncio
    @pytest.mark.tools
    async def test_singular_characteristic(self):
        """Test the report for p = 3."""
        tool = VerifyTool()

        result = await tool.execute({"p": 3})

        result_data = json.loads(result)
        assert result_data["singular"] is True
        assert result_data["all_minors_zero"] is True
        assert set(result_data["minors"].values()) == {"0"}

    @pytest.mark.asyncio
    @pytest.mark.tools
    async def test_not_prime(self):
        """Test that a non-prime is reported."""
        tool = VerifyTool()

        result = await tool.execute({"p": 15})

        assert json.loads(result)["error_type"] == "InvalidModulusError"
