"""Exact verification toolkit for generalized triangle groups of type (3,4,2)."""

__version__ = "0.1.0"
