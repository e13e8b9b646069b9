"""Exception hierarchy shared by every module of the package."""


class HLFError(Exception):
    """Base class for all library errors."""


class IndeterminateSum(HLFError, ArithmeticError):
    """Raised when +inf and -inf meet in a sum."""


class DimensionMismatch(HLFError, ValueError):
    pass


class PrimeMismatch(HLFError, ValueError):
    pass


class InvalidNetValues(HLFError, ValueError):
    """A net takes an infinity that the requested operation forbids."""


class InvalidPartition(HLFError, ValueError):
    """The pieces of a net do not tile Z^d exactly."""


class GaugeInfinite(HLFError, ArithmeticError):
    pass


class ScheduleNotMonotone(HLFError, ValueError):
    pass


class EmptyProduct(HLFError, ValueError):
    pass


class NonpositiveRho(HLFError, ValueError):
    pass


class NotClassified(HLFError, ValueError):
    """An input net fails the classification an operation requires."""
