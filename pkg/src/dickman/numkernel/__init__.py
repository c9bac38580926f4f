"""Shared numeric substrate: precision, quadrature, series, constants."""

from .chebyshev import ChebPiece
from .gamma import rgamma
from .quadrature import (
    DEFAULT_CONFIG,
    FAST_CONFIG,
    PrecisionConfig,
    fixed_gauss,
    gauss_legendre,
    integrate,
    integrate_with_error,
)
from .series import PowerSeries, series_exp, series_log
from .xreal import (
    WORKING_PRECISION,
    XComplex,
    XReal,
    from_decimal,
    precision,
    to_decimal,
    unit_roundoff,
    xcomplex,
    xp,
    xreal,
)
from .zeta import ZetaTable, bernoulli, euler_gamma, zeta_em, zeta_even, zeta_values

__all__ = [
    "ChebPiece", "DEFAULT_CONFIG", "FAST_CONFIG", "PowerSeries", "PrecisionConfig",
    "WORKING_PRECISION", "XComplex", "XReal", "ZetaTable", "bernoulli", "euler_gamma",
    "fixed_gauss", "from_decimal", "gauss_legendre", "integrate", "integrate_with_error",
    "precision", "rgamma", "series_exp", "series_log", "to_decimal", "unit_roundoff",
    "xcomplex", "xp", "xreal", "zeta_em", "zeta_even", "zeta_values",
]
