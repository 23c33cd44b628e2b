"""Exception types shared across the package."""


class RsphoError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RsphoError):
    """An input lies outside the mathematical domain of an operation.

    Raised, for example, when a square-root argument goes negative, when a
    coordinate hits a singularity of the potential, or when a request
    violates a sign precondition.  The message names the offending quantity
    and its value.
    """


class NoRootError(RsphoError):
    """The energy scan found no sign change, so no bound state was bracketed."""


class ConvergenceError(RsphoError):
    """An iteration failed to converge within its configured budget."""
