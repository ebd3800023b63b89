"""Exception types shared across the package.

Every domain error carries a short machine-readable ``code``; the CLI
turns these into ``{"error": code, "detail": message}`` diagnostics with
exit status 2. Anything else escaping the CLI is a bug (exit status 1).
"""


class CurveAlgebraError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "ERROR"


class ValidationError(CurveAlgebraError):
    """Malformed input data (JSON schema, coefficient encoding, model shape)."""

    code = "SCHEMA"


class UsageError(ValidationError):
    """Bad command-line arguments."""

    code = "USAGE"


class ShapeMismatchError(CurveAlgebraError):
    """Vectors with different branch counts or truncation orders were mixed."""

    code = "SHAPE_MISMATCH"


class NonCofiniteError(CurveAlgebraError):
    """The semigroup has gcd of generators > 1, so its gap set is infinite."""

    code = "NON_COFINITE"


class InsufficientTruncationError(CurveAlgebraError):
    """Jet data is too short to read the requested information."""

    code = "INSUFFICIENT_TRUNCATION"


class UnstableTruncationError(CurveAlgebraError):
    """The three-point truncation stability check failed; raise the order."""

    code = "UNSTABLE_TRUNCATION"


class NotMonomialUnibranchError(CurveAlgebraError):
    """The semigroup fast path needs a unibranch monomial parametrization."""

    code = "NOT_MONOMIAL_UNIBRANCH"


class DisconnectedError(CurveAlgebraError):
    """The torus-rank formula assumes a connected curve."""

    code = "DISCONNECTED"


class MissingCountError(CurveAlgebraError):
    """An intersection count is missing for a ruling in the profile table."""

    code = "MISSING_COUNT"
