"""Exception types shared across the package.

The CLI maps each of these to a fixed exit code (see ``quasiword.cli``).
"""


class QuasiwordError(Exception):
    """Base class for all errors raised by this package."""


class InvalidWordError(QuasiwordError, ValueError):
    """Malformed input: empty quasiperiod, unknown symbol, bad alphabet."""


class BudgetExceeded(QuasiwordError):
    """A brute-force enumeration would exceed the configured word budget."""


class NotACodeError(QuasiwordError):
    """A word list admits two distinct factorizations of the same word."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvariantViolation(QuasiwordError):
    """An internal cross-check between independent routes disagreed."""
