"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed input text; carries the 0-based source position."""

    def __init__(self, message: str, text: str = "", position: int = 0, expected=()):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        detail = message
        if self.expected:
            detail += f" (expected {' or '.join(self.expected)})"
        super().__init__(f"{detail} at position {position}")

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^"


class InvalidPairError(ValueError):
    """The pair violates D_+ + D_- <= 0 or mixes coordinates."""


class NormalizationError(ValueError):
    """The pair cannot be brought to the normal form.

    ``reason`` is one of ``multi_point``, ``irrational_locus``,
    ``denominator_mismatch``, ``not_effective``.
    """

    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(message)
