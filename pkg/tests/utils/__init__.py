"""Tests for superspecial-survey utilities."""
