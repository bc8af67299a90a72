"""Exact arithmetic over Q: polynomials, rational functions, truncated series."""
from .functions import (
    BRIDGE_TEXT, FC, FCOONS, FRPF, FTMM, GCOONS, Bridge, FunctionId, G, T, U,
    bridge_sides, check_mahler_equation, functional_equation, lambert_coefficient,
    series_of, verify_bridge_identity, verify_functional_equation,
)
from .polynomial import ONE, Z, PoleError, Poly, RatFunc, eval_rational_function, frac_str, parse_fraction
from .series import TruncatedSeries, substitute_power

__all__ = [
    "BRIDGE_TEXT", "Bridge", "FC", "FCOONS", "FRPF", "FTMM", "FunctionId", "G", "GCOONS",
    "ONE", "PoleError", "Poly", "RatFunc", "T", "TruncatedSeries", "U", "Z",
    "bridge_sides", "check_mahler_equation", "eval_rational_function", "frac_str",
    "functional_equation", "lambert_coefficient", "parse_fraction", "series_of",
    "substitute_power", "verify_bridge_identity", "verify_functional_equation",
]
