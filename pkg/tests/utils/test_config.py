"""
Tests for environment-driven settings.
"""

import pytest

from superspecial_survey.errors import ConfigurationError
from superspecial_survey.utils.config import get_settings


class TestSettings:
    """Tests for get_settings."""

    @pytest.mark.utils
    def test_defaults(self, monkeypatch, temp_user_dir):
        """Test default settings."""
        monkeypatch.delenv("SUPERSPECIAL_WORKERS")
        settings = get_settings()
        assert settings.expansion_gate == 13
        assert settings.brute_gate == 13
        assert settings.max_prime == 1_000_000
        assert settings.cube_table_limit == 1_000_000
        assert settings.workers == 0
        assert settings.effective_workers() >= 1
        assert settings.log_level == "WARNING"
        assert settings.home == temp_user_dir

    @pytest.mark.utils
    def test_derived_paths(self, temp_user_dir):
        """Test the cache and history paths."""
        settings = get_settings()
        assert settings.cache_file == temp_user_dir / "survey-cache.jsonl"
        assert settings.history_file == temp_user_dir / ".runs" / "history.jsonl"

    @pytest.mark.utils
    def test_overrides(self, monkeypatch):
        """Test overriding settings from the environment."""
        monkeypatch.setenv("SUPERSPECIAL_EXPANSION_GATE", "17")
        monkeypatch.setenv("SUPERSPECIAL_WORKERS", "4")
        monkeypatch.setenv("SUPERSPECIAL_LOG_LEVEL", "debug")
        settings = get_settings()
        assert settings.expansion_gate == 17
        assert settings.effective_workers() == 4
        assert settings.log_level == "DEBUG"

    @pytest.mark.utils
    @pytest.mark.parametrize("name,value", [
        ("SUPERSPECIAL_BRUTE_GATE", "thirteen"),
        ("SUPERSPECIAL_EXPANSION_GATE", "2"),
        ("SUPERSPECIAL_WORKERS", "-1"),
        ("SUPERSPECIAL_MAX_PRIME", "1.5"),
    ])
    def test_invalid_values(self, monkeypatch, name, value):
        """Test that invalid values are rejected."""
        monkeypatch.setenv(name, value)
        with pytest.raises(ConfigurationError):
            get_settings()
