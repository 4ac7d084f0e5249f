"""Exception taxonomy shared across the package.

The CLI maps these onto its exit-code contract: schema problems exit
2, oracle disagreement 3, missing ring capability 4, dimension
mismatches 5.
"""

__all__ = [
    "SwkError", "RingError", "CapabilityError", "SchemaError",
    "OracleMismatch", "DimensionError", "InconsistentSystemError",
    "BoundExhausted",
]


class SwkError(Exception):
    """Base class for package errors."""


class RingError(SwkError):
    """Invalid ring construction or mixed-ring arithmetic."""


class CapabilityError(SwkError):
    """The coefficient ring lacks a required feature (e.g. sqrt q)."""


class SchemaError(SwkError):
    """Malformed job document or element encoding."""


class OracleMismatch(SwkError):
    """Two independent computations of the same value disagree."""


class DimensionError(SwkError):
    """Vector/matrix dimensions inconsistent with the module."""


class InconsistentSystemError(SwkError):
    """A linear system proved to be uniquely solvable failed its
    residual check; this always indicates an implementation bug."""


class BoundExhausted(SwkError):
    """A table operation needs values beyond the stored box."""
