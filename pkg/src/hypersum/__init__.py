"""Hyperbolic sums, q-series and Jacobi elliptic-function identities in double precision."""

from .elliptic_core import EllipticContext, context_from_r
from .errors import ConvergenceError, DomainError, PoleError, TruncationError
from .identities import CATALOG, VerificationReport, verify, verify_all

__all__ = [
    "CATALOG",
    "ConvergenceError",
    "DomainError",
    "EllipticContext",
    "PoleError",
    "TruncationError",
    "VerificationReport",
    "context_from_r",
    "verify",
    "verify_all",
]

__version__ = "0.1.0"
