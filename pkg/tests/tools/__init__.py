"""Tests for superspecial-survey tools."""
