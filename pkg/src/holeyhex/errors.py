"""Exception types shared across the package."""


class HoleyHexError(Exception):
    """Base class for all errors raised by holeyhex."""


class OutOfBounds(HoleyHexError, ValueError):
    pass


class Duplicate(HoleyHexError, ValueError):
    pass


class InconsistentTriple(HoleyHexError, ValueError):
    """The three line labels do not bound a unit triangle of the claimed orientation."""


class Untileable(HoleyHexError):
    """Some remaining triangle has no available partner."""


class VertexNotPresent(HoleyHexError, KeyError):
    pass


class HalfIntegerArgument(HoleyHexError, ValueError):
    """A doubled coordinate that should be even was odd."""


class ParityViolation(HoleyHexError, ValueError):
    pass


class NotSquare(HoleyHexError, ValueError):
    pass


class Singular(HoleyHexError, ZeroDivisionError):
    pass


class TooLarge(HoleyHexError, ValueError):
    pass


class DomainError(HoleyHexError, ValueError):
    """Factorial of a negative integer in a numerator."""


class NotAdmissible(HoleyHexError):
    """|det| of the reduced matrix would count signed matchings, not tilings."""


class UnbalancedColors(HoleyHexError, ValueError):
    pass


class SignInconsistency(HoleyHexError, AssertionError):
    pass


class RouteDisagreement(HoleyHexError):
    def __init__(self, message, counts):
        super().__init__(message)
        self.counts = counts


class DegenerateFit(HoleyHexError, ValueError):
    pass
