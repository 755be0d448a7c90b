"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A distribution, kernel or channel tensor violates its invariants."""


class PreconditionError(ValueError):
    """An operation was called on an object outside its supported class
    (e.g. a bound evaluator on a channel that is not output-symmetric)."""


class ChannelSpecError(ValueError):
    """A channel spec file is malformed; the message names the offending field."""


class BudgetExceededError(RuntimeError):
    """An enumeration or sweep would exceed the configured budget.

    ``required`` carries the estimated number of elementary terms so callers
    can decide whether to raise the budget or fall back to sampling.
    """

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required
