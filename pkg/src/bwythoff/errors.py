"""Exception hierarchy shared across the package."""


class BWythoffError(Exception):
    """Base class for every package-specific error."""


class PrecisionExhausted(BWythoffError):
    """A digit constant cannot supply enough precision to decide a result."""


class NotIrrational(BWythoffError):
    """A spec that must denote an irrational provably denotes a rational."""


class BetaOutOfRange(BWythoffError):
    """The enclosure of beta cannot prove beta > 2."""


class ParseError(BWythoffError):
    """Malformed beta spec string; carries the byte offset of the first error."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class IllegalMove(BWythoffError):
    """Move rejected by the rules; `reason` is a machine-readable code."""

    def __init__(self, message: str, reason: str = "out-of-bounds"):
        super().__init__(message)
        self.reason = reason


class OutOfBounds(BWythoffError):
    """Position lies outside the solved grid."""


class CapacityExceeded(BWythoffError):
    """Requested grid would exceed the configured resource budget."""


class UnknownSession(BWythoffError):
    """No session with the given id."""


class NotYourTurn(BWythoffError):
    """The session is not waiting for a human move."""
