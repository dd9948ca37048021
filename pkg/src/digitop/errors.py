"""Exception types shared across the package."""


class DigitopError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(DigitopError, ValueError):
    """Points or images of different ambient dimensions were combined."""


class SignatureMismatch(DigitopError, ValueError):
    """Maps with incompatible domains/codomains were combined."""


class NotAMember(DigitopError, ValueError):
    """A point was required to belong to an image and does not."""


class NotContinuous(DigitopError, ValueError):
    """An operation required a continuous map and received one that is not."""


class PreconditionError(DigitopError, ValueError):
    """Input data violates a documented precondition."""


class EnumerationOverflow(DigitopError, RuntimeError):
    """An enumeration exceeded its explicit cap.

    Carries the cap so callers can report the bound that was hit.
    """

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"enumeration exceeded cap of {cap}")


class SearchBudgetExceeded(DigitopError, RuntimeError):
    """A backtracking search ran out of its node budget before finishing."""

    def __init__(self, budget, message=None):
        self.budget = budget
        super().__init__(message or f"search exceeded node budget of {budget}")


class InternalVerificationError(DigitopError, AssertionError):
    """A constructed witness failed its own verification.

    Constructions backed by a proof must always verify; failure indicates
    a bug in this package, not bad user input.
    """
