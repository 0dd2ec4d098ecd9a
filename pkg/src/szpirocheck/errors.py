"""Shared exception types.

Every operation raises one of these instead of returning sentinel values,
so batch drivers can classify failures (skip vs abort) uniformly.
"""


class SzpirocheckError(Exception):
    """Base class for all package errors."""


class DomainError(SzpirocheckError):
    """Input violates a documented precondition."""


class SingularModelError(DomainError):
    """Curve model has vanishing discriminant."""


class PrecisionError(SzpirocheckError):
    """A numeric reconstruction or root isolation did not certify."""


class UnsupportedError(SzpirocheckError):
    """Input exceeds a desk-scale cap (degree, factor search budget)."""


class ResourceError(SzpirocheckError):
    """Computation would exceed a hard resource cap (e.g. factoring)."""


class ConditioningError(SzpirocheckError):
    """Matrix too ill-conditioned; reduce to the fundamental domain first."""


class ReductionError(SzpirocheckError):
    """Fundamental-domain reduction failed to terminate."""
