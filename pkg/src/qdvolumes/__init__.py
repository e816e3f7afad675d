"""Exact Masur-Veech volumes of strata of quadratic differentials."""

__version__ = "0.1.0"
