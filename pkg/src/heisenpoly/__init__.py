"""Heisenberg polynomials: exact values, uniform asymptotics, T-functions and zeros."""

__version__ = "0.1.0"

from .core import Jet, Params, validate_params
from .darboux import CoeffTable, coeff_table
from .exact import eval_exact, eval_via_generating_recurrence, gegenbauer_oracle, poly_value
from .expansion import error_profile, expand_cor1, expand_thm1, expand_thm2
from .special import t_pair, t_pair_bessel, t_pair_kummer, t_pair_series
from .zeros import cosine_approx, find_zeros, prop1_scan, zero_order_check

__all__ = [
    "CoeffTable",
    "Jet",
    "Params",
    "coeff_table",
    "cosine_approx",
    "error_profile",
    "eval_exact",
    "eval_via_generating_recurrence",
    "expand_cor1",
    "expand_thm1",
    "expand_thm2",
    "find_zeros",
    "gegenbauer_oracle",
    "poly_value",
    "prop1_scan",
    "t_pair",
    "t_pair_bessel",
    "t_pair_kummer",
    "t_pair_series",
    "validate_params",
    "zero_order_check",
]
