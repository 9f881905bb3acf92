"""Exception types shared across the package.

Every error raised on purpose by this package derives from SkewredError, so
callers (CLI, HTTP service, tests) can catch domain failures in one clause.
Division by a zero field element or zero polynomial raises the builtin
ZeroDivisionError instead of a custom type.
"""


class SkewredError(Exception):
    """Base class for all package-specific errors."""


class ConstructionError(SkewredError):
    """Invalid field parameters (bad prime, reducible modulus, bad frob power)."""


class ContextError(SkewredError):
    """Operands belong to different field contexts."""


class DependentPointsError(SkewredError):
    """Evaluation points are linearly dependent over the fixed subfield."""


class ZeroVectorError(SkewredError):
    """Leading position requested for an all-zero vector."""


class ShiftError(SkewredError):
    """Invalid shift vector, or an unshift hit a nonzero low-order coefficient."""


class TransformError(SkewredError):
    """Simple-transformation preconditions violated."""


class SingularMatrixError(SkewredError):
    """Matrix is rank deficient where full rank is required."""


class PreconditionError(SkewredError):
    """Input not in the form an algorithm step requires (e.g. not weak Popov)."""


class InstanceError(SkewredError):
    """Malformed problem instance (sizes, degree bounds, parameter ranges)."""


class EncodeError(SkewredError):
    """Message does not fit the code (wrong count or degree too large)."""


class ChannelError(SkewredError):
    """Requested error pattern is impossible (rank too large for the space)."""
