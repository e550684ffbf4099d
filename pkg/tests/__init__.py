"""Tests for superspecial-survey."""
