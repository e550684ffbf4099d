"""Arithmetic engines: fields, polynomials, the criterion, smoothness, counting, survey."""
