"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class ScaleError(ValueError):
    """An input is too large for the requested exhaustive computation."""


class ConsistencyError(RuntimeError):
    """Two independent routes to the same quantity disagreed.

    Raised when an internal cross-check fails, e.g. a sum that must be
    divisible by the averaging modulus is not, or a checked exact division
    leaves a remainder.  Always indicates a bug, never bad user input.
    """


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
