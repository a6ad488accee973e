"""Exception types shared across the package.

Two failure families are kept apart on purpose: bad input from the caller
(ValidationError, maps to CLI exit code 2) and an internal check that the
computed numbers violate a known identity (ConsistencyError, exit code 3).
"""


class ValidationError(ValueError):
    """Caller-supplied input is outside the domain of an operation."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed (quadrature identity, sign condition,
    cross-check between two independent routes). Indicates a bug or a
    numerically hostile configuration, not bad user input."""
