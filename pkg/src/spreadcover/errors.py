"""Exception hierarchy shared by every module.

The CLI maps any ``SpreadCoverError`` to exit code 1.
"""


class SpreadCoverError(Exception):
    """Base class for domain errors."""


class InvalidArgumentError(SpreadCoverError, ValueError):
    pass


class ResourceLimitError(SpreadCoverError):
    """An instance is larger than the configured vertex cap."""


class InapplicableBoundError(SpreadCoverError):
    """A closed-form bound was requested outside its (n, d) range."""


class ContractViolationError(SpreadCoverError):
    """A precondition on a cover (validity, etc.) does not hold."""


class LimitExceededError(SpreadCoverError):
    """An exact search could not finish; carries what it knew when it stopped."""

    def __init__(self, message, lower=None, incumbent=None):
        super().__init__(message)
        self.lower = lower
        self.incumbent = incumbent
