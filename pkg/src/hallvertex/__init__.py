"""Exact symmetric functions over Q(t): Hall-Littlewood vertex operators and Hall polynomials."""

__version__ = "0.1.0"
