"""Exception types shared across the toolkit."""


class ComputationError(RuntimeError):
    """A numerical routine could not produce a trustworthy result."""


class PreconditionError(ValueError):
    """An input violates a documented hypothesis; the message names the clause."""
