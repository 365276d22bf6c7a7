"""Exception types shared across the package."""


class QcpError(Exception):
    """Base class for all package errors."""


class ValidationError(QcpError, ValueError):
    """An input violates its declared preconditions."""


class InternalConsistencyError(QcpError, RuntimeError):
    """A self-check failed: holdout mismatch, non-integral interpolation,
    or a broken structural invariant.  Indicates a bug, never bad input."""


class BudgetExceededError(QcpError, RuntimeError):
    """A computation would exceed its configured work budget."""
