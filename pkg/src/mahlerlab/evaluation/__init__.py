"""Certified ball evaluation of the Mahler functions at rational points."""
from .ball import BallReal, decimal_digits, decimal_string, power_upper
from .evaluate import (
    BRIDGE_PARTNER, EvalPoint, InvalidPointError, NoBridgeError, TailBoundError,
    choose_terms, eval_two_routes, evaluate, tail_bound,
)

__all__ = [
    "BRIDGE_PARTNER", "BallReal", "EvalPoint", "InvalidPointError", "NoBridgeError",
    "TailBoundError", "choose_terms", "decimal_digits", "decimal_string",
    "eval_two_routes", "evaluate", "power_upper", "tail_bound",
]
