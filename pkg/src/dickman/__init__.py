"""Dickman's function, iterated integrals I_k, Dickman constants C_k and sieve checks."""

from .asymptotic import (
    DecayScan,
    ExpansionReport,
    PerronResult,
    error_decay_scan,
    expand_Ik,
    expand_Lk,
    g_diag,
    perron,
    perron_integral,
)
from .constants import (
    CoeffTable,
    ContourSpec,
    constants_from_contour,
    constants_from_zeta,
    genfun,
)
from .errors import (
    BranchCutTouched,
    ConstantTermNonzero,
    DepthExceeded,
    DickmanError,
    InsufficientZetaTable,
    IntervalBuildFailed,
    NonFiniteSample,
    OutOfRange,
    RecursionBudgetExceeded,
    ResourceLimit,
    TailTooLarge,
)
from .iterated import IkEvaluator, I_k, L_k, ramanujan_nested
from .numkernel import DEFAULT_CONFIG, FAST_CONFIG, PrecisionConfig, XReal, xp, xreal
from .rho import F, FView, RhoSpline, load_spline, rho_series, rho_steps, save_spline
from .sieve import (
    AlmostPrimeResult,
    SieveResult,
    almost_prime_count,
    ramanujan_phi_check,
    smooth_count,
)

__version__ = "0.1.0"
