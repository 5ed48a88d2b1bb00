"""Exception types shared across the library."""


class SkewError(Exception):
    """Base class for all library-specific errors."""


class FieldMismatchError(SkewError):
    """Operands belong to different fields or rings."""


class GuardExceededError(SkewError):
    """A brute-force search would exceed its desk-scale cost guard."""

    def __init__(self, message, cost=None):
        super().__init__(message)
        self.cost = cost


class ConditionViolatedError(SkewError):
    """A construction precondition does not hold; the message names it."""


class NotARightDivisorError(SkewError):
    """The given polynomial does not right-divide the modulus."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NotTwoSidedError(SkewError):
    """The modulus does not generate a two-sided ideal."""


class NotConstacyclicError(SkewError):
    """The operation needs a modulus of the form x^n - a with a nonzero."""


class NotWedderburnError(SkewError):
    """The polynomial is not the minimal polynomial of its vanishing set."""


class ParseError(SkewError):
    """Malformed polynomial, element, or config text."""


class SearchCancelledError(SkewError):
    """A cooperative cancellation token stopped a long-running search."""
