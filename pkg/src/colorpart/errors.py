"""Exception hierarchy for the colorpart package."""


class ColorpartError(Exception):
    """Base class for all package-specific errors."""


class SpecError(ColorpartError, ValueError):
    """A raw (s, l) pair violates a validity invariant."""


class EmptySpec(SpecError):
    pass


class NonIncreasingModuli(SpecError):
    pass


class FirstModulusNotOne(SpecError):
    pass


class NonPositiveMultiplicity(SpecError):
    pass


class WindowUndefined(ColorpartError):
    """The eta window requires k + l[0] >= 3."""


class TooLarge(ColorpartError):
    """Estimated work for a tuple enumeration exceeds the configured budget."""


class BudgetExceeded(TooLarge):
    """Region-split enumeration would exceed the configured budget."""


class EtaOutOfWindow(ColorpartError, ValueError):
    pass


class NonPositive(ColorpartError, ValueError):
    """Logarithm of a non-positive integer was requested."""


class InsufficientData(ColorpartError, ValueError):
    """Too few (or too narrowly spread) rows for an exponent fit."""


class RadiusTooSmall(ColorpartError, ValueError):
    """The Gaussian tail bound exp(-r^2) is only valid for r >= 1."""


class QuadratureFailure(ColorpartError):
    """Adaptive quadrature did not converge to the requested tolerance."""


class SumIntegralBoundError(ColorpartError):
    """|lattice sum - integral| exceeded the 2*(m+1)*max|f| bound."""


class OracleMismatch(ColorpartError):
    """Two exact methods disagreed on a coefficient."""
