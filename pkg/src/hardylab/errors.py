"""Exception types shared across the package."""


class HardyLabError(Exception):
    """Base class for all errors raised by hardylab."""


class DomainError(HardyLabError, ValueError):
    """An input violates a documented precondition (message names the bound)."""


class NumericError(HardyLabError, ArithmeticError):
    """A computation produced non-finite or otherwise unusable values."""


class DivergenceError(NumericError):
    """A layer-cake integrand fails to decay on the sampling window."""


class OverlapError(DomainError):
    """Bubble supports overlap; additive evaluation would be invalid."""


class UnsupportedProfileError(HardyLabError, TypeError):
    """The operation requires a profile shape this input does not have."""
