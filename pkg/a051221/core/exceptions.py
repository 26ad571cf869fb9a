"""Core exception classes for the A051221 certifier.

All exceptions raised by the package inherit from A051221Error,
making it easy to catch any package-specific error in a single handler.

An inconclusive exclusion is a result, not an error: it never raises.
"""


class A051221Error(Exception):
    """Base exception for all A051221 certifier errors.

    Attributes:
        message: Human-readable error description.
        code: Optional numeric code (the CLI exit status it maps to).
    """

    def __init__(self, message: str, code: int | None = None) -> None:
        self.message = message
        self.code = code
        super().__init__(self.message)


class A051221ValidationError(A051221Error):
    """Raised when an input or configuration violates an operation's contract."""

    def __init__(self, message: str, code: int | None = 3) -> None:
        super().__init__(message, code)


class A051221PrimeError(A051221ValidationError):
    """Raised when a modulus is not an odd prime coprime to 10."""


class A051221WidthError(A051221ValidationError):
    """Raised when an exponent exceeds the fixed-width oracle bound."""


class A051221InvariantError(A051221Error):
    """Raised when an internal invariant is violated.

    Seeing this means the implementation is wrong, not the theorem.
    """

    def __init__(self, message: str, code: int | None = 4) -> None:
        super().__init__(message, code)
