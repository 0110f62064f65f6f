"""Exception hierarchy shared by every module of the engine."""


class QKError(Exception):
    """Base class for all engine errors."""


class TruncationMismatch(QKError, ValueError):
    pass


class AugmentationError(QKError, ValueError):
    pass


class OrderMismatch(QKError, ValueError):
    pass


class CycloDivisionByZero(QKError, ZeroDivisionError):
    pass


class RootOrderError(QKError, ValueError):
    """A root of unity (or a (1 - q^k) factor) beyond the configured maximum order."""


class WindowTooSmall(QKError, ValueError):
    pass


class PrecisionLost(WindowTooSmall):
    """A needed series coefficient lies beyond the known precision."""


class NotInFakeRange(QKError, ValueError):
    pass


class NonUnitLeading(QKError, ValueError):
    pass


class NonInvertibleDenominator(QKError, ValueError):
    pass


class NonPositiveInput(QKError, ValueError):
    pass


class UnsupportedDenominator(QKError, ValueError):
    """Division by something with a pole away from the allowed roots of unity."""


class ExprSyntaxError(QKError, ValueError):
    def __init__(self, message, text="", pos=0, expected=()):
        self.text = text
        self.pos = pos
        self.expected = tuple(expected)
        detail = message
        if expected:
            detail += " (expected " + ", ".join(expected) + ")"
        super().__init__(f"{detail} at position {pos}")


class InvariantViolation(QKError, RuntimeError):
    pass
