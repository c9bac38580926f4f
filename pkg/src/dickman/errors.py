"""Exception hierarchy shared by every module.

All errors derive from :class:`DickmanError`, so a caller that only wants to
know "did the computation fail" can catch that; the CLI reports the concrete
class name.
"""


class DickmanError(Exception):
    """Base class for computation errors raised by this package."""


class DepthExceeded(DickmanError):
    """Adaptive quadrature hit its subdivision limit before meeting tolerance."""

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class NonFiniteSample(DickmanError):
    """An integrand returned inf or nan at a quadrature node."""

    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node


class ConstantTermNonzero(DickmanError):
    pass


class InsufficientZetaTable(DickmanError):
    pass


class RecursionBudgetExceeded(DickmanError):
    pass


class OutOfRange(DickmanError):
    pass


class TailTooLarge(DickmanError):
    def __init__(self, message, k=None, tail=None):
        super().__init__(message)
        self.k = k
        self.tail = tail


class BranchCutTouched(DickmanError):
    pass


class ResourceLimit(DickmanError):
    pass


class IntervalBuildFailed(DickmanError):
    """Building one unit interval of the rho spline failed."""

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval
