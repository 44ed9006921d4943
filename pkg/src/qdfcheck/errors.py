"""Exception types raised across the package."""


class QdfError(Exception):
    """Base class for all package errors."""


class FieldError(QdfError):
    pass


class ParseError(QdfError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        where = f" at position {position}" if text else ""
        super().__init__(f"{message}{where}")


class UnknownVariableError(ParseError):
    pass


class RingMismatchError(QdfError):
    """Operands live in different rings or over different fields."""


class ResourceLimitExceeded(QdfError):
    """A Groebner computation hit its configured budget.

    Never converted into a verdict: callers either propagate it or report
    the claim as resource-limited.
    """


class NotZeroDimensionalError(QdfError):
    pass


class UnsupportedCenterError(QdfError):
    pass


class ReductionError(QdfError):
    """Local hypersurface reduction for Hessian classification failed."""


class PreconditionError(QdfError):
    pass
