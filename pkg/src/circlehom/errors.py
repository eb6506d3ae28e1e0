"""Exception hierarchy shared across the package.

Exit-code convention used by the CLI: 0 ok, 1 property/decision failure,
2 usage error, 3 configuration error.
"""


class CirclehomError(Exception):
    """Base class for all package errors."""


class UsageError(CirclehomError):
    """Malformed input: bad expression, bad JSON, violated operation precondition."""


class ConfigurationError(CirclehomError):
    """Bad basis configuration, basis mismatch, or certificate refinement exhaustion."""


class PreconditionError(UsageError):
    """An operation's stated precondition does not hold for the given arguments."""


class EndpointMismatchError(PreconditionError):
    """Shells passed to a construction do not admit the required common endpoint data."""


class VerificationError(CirclehomError):
    """A constructed certificate failed its re-verification; indicates an internal bug."""


class MalformedWalkError(CirclehomError):
    """A verified chain-walk did not yield representation data; indicates an internal bug."""
