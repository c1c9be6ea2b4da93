from .bessel import bessel_j, bessel_j_asymptotic, bessel_j_series, bessel_zero, mcmahon_guess
from .gamma import gamma_fn, gamma_sign, log_gamma_signed, rgamma
from .kummer import kummer_m, kummer_m_asymptotic, kummer_m_prime, kummer_m_series
from .tfuncs import (
    Route,
    TPair,
    entire_part,
    series_coefficients,
    t_pair,
    t_pair_bessel,
    t_pair_kummer,
    t_pair_series,
)

__all__ = [
    "Route",
    "TPair",
    "bessel_j",
    "bessel_j_asymptotic",
    "bessel_j_series",
    "bessel_zero",
    "entire_part",
    "gamma_fn",
    "gamma_sign",
    "kummer_m",
    "kummer_m_asymptotic",
    "kummer_m_prime",
    "kummer_m_series",
    "log_gamma_signed",
    "mcmahon_guess",
    "rgamma",
    "series_coefficients",
    "t_pair",
    "t_pair_bessel",
    "t_pair_kummer",
    "t_pair_series",
]
