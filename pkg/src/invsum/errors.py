"""Exception types shared across the package."""


class InvsumError(Exception):
    """Base class for all errors raised by invsum."""


class InvalidModulus(InvsumError, ValueError):
    pass


class NotInvertible(InvsumError, ArithmeticError):
    pass


class ZeroInverse(NotInvertible):
    """Raised when inverting zero in a field."""


class OutOfRange(InvsumError, ValueError):
    pass


class SpecMismatch(InvsumError, TypeError):
    """Operands belong to different fields."""


class TooLarge(InvsumError, ValueError):
    """The requested enumeration exceeds the configured cap."""


class UnsupportedStructure(InvsumError, TypeError):
    pass
