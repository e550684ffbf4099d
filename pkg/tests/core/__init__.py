"""Tests for the arithmetic engines."""
