"""Exception types shared across the package."""


class NumericalFailureError(Exception):
    """A matrix or vector violated a numerical tolerance it must satisfy.

    Raised when an input that is supposed to be (for example) Hermitian,
    unit-trace or positive semidefinite misses the documented tolerance,
    or when an intermediate quantity picks up enough floating-point error
    that the result can no longer be trusted.
    """


class RejectionExhaustedError(Exception):
    """A rejection sampler gave up before accepting a candidate."""

    def __init__(self, attempts: int, message: str | None = None):
        self.attempts = attempts
        if message is None:
            message = f"no candidate accepted after {attempts} attempts"
        super().__init__(message)


class ConfigError(Exception):
    """An experiment configuration is inconsistent or out of range."""
