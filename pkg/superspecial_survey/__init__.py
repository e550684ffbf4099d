"""Superspeciality and point-count survey for the genus-4 curves x^3+y^3+w^3 = 2yw+z^2 = 0."""

__version__ = "0.1.0"
