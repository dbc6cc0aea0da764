"""Exceptions raised by bicomplex_paley_wiener."""


class BicomplexError(Exception):
    """Base class for all errors raised by this package."""


class ZeroDivisorError(BicomplexError, ZeroDivisionError):
    """Raised when inverting a bicomplex number with a vanishing idempotent
    component (zero or a zero divisor)."""


class NonFiniteError(BicomplexError, ValueError):
    """Raised when samples, weights or evaluation points are NaN or
    infinite."""


class BadTruncationError(BicomplexError, ValueError):
    """Raised when an infinite integration bound has no usable
    truncation."""


class OutOfDomainError(BicomplexError, ValueError):
    """Raised when a point or line lies outside the half-plane an operator
    is defined on."""


class OnBoundaryError(BicomplexError, ValueError):
    """Raised when a Cauchy kernel is evaluated on the boundary line."""


class DivergenceError(BicomplexError, ArithmeticError):
    """Raised when the terms of a quadrature sum grow beyond the growth
    limit."""
