"""Exception hierarchy shared by all modules."""


class EhrhartError(Exception):
    """Base class for every error raised by this package."""


class DegenerateInput(EhrhartError):
    """Point set does not span its ambient space."""


class DimensionTooLarge(EhrhartError):
    pass


class InconsistentCounts(EhrhartError):
    """Interpolated coefficients disagree with the geometric cross-checks.

    This signals a bug in the geometry layer, never a user error.
    """


class NonConvergence(EhrhartError):
    pass


class NotSymmetric(EhrhartError):
    pass


class NotFullDimensional(EhrhartError):
    pass


class DependentDirections(EhrhartError):
    pass


class ParameterConstraint(EhrhartError):
    pass


class Not2D(EhrhartError):
    pass


class BudgetExceeded(EhrhartError):
    pass
