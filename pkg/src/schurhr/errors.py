"""Exception types shared across the package.

All are ValueError subclasses so callers that only care about "bad input"
can catch the base class; the CLI maps them to distinct diagnostics.
"""


class SpaceMismatchError(ValueError):
    """Operands live on different ambient spaces."""


class DegreeMismatchError(ValueError):
    """A class or polynomial has the wrong (co)homological degree."""


class PreconditionError(ValueError):
    """A documented precondition of a verifier was violated."""
