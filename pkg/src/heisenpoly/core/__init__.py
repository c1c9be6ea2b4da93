from .dd import CDD, DD, two_prod, two_sum
from .jet import DEFAULT_ORDER, Jet, jet_exp, jet_log, jet_pow
from .params import EvalPoint, Params, is_nonpositive_integer, validate_params

__all__ = [
    "CDD",
    "DD",
    "DEFAULT_ORDER",
    "EvalPoint",
    "Jet",
    "Params",
    "is_nonpositive_integer",
    "jet_exp",
    "jet_log",
    "jet_pow",
    "two_prod",
    "two_sum",
    "validate_params",
]
