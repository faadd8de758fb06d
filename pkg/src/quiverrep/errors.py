"""Exception taxonomy shared by the library and the CLI exit-code mapping."""


class ValidationError(ValueError):
    """Bad input: malformed documents, shape mismatches, violated preconditions."""


class NumericalFailure(RuntimeError):
    """A numerical routine produced inconsistent or unusable results."""


class SizeLimitExceeded(RuntimeError):
    """A dense solve would exceed the configured size budget."""
