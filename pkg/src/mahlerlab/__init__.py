"""Computable Mahler functions: exact series, certified values, decision procedures, relation search."""

__version__ = "0.1.0"
