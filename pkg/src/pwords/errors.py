"""Exception types raised across the package."""


class InvalidAlphabetError(ValueError):
    """A symbol lies outside ``0..d`` or ``d`` itself is out of range."""


class InvalidWordError(ValueError):
    """A word is well-formed over its alphabet but violates the grammar."""


class InvalidPartitionError(ValueError):
    """A d-dimensional partition violates monotonicity or positivity."""


class BudgetExceededError(RuntimeError):
    """A size or time budget ran out before the computation finished.

    ``partial`` holds the number of items produced so far.
    """

    def __init__(self, message, partial=0):
        super().__init__(message)
        self.partial = partial


class SearchExhaustedError(RuntimeError):
    """A bounded search ended without a verdict (the answer is unknown)."""


class DegenerateSampleError(ValueError):
    """A sample cannot be fitted (too small, or all values equal)."""


class ContractError(ValueError):
    """Inputs violate a precondition shared between two objects."""
