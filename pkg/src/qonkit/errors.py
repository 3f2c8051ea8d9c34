"""Exception types shared across the package."""


class QonkitError(Exception):
    """Base class for every error raised by this package."""


class DegenerateParameterError(QonkitError, ValueError):
    """Deformation parameters for which a closed form is undefined and no limit applies."""


class DivergenceError(QonkitError, ValueError):
    """Series argument outside the convergence domain."""


class TruncationError(QonkitError, RuntimeError):
    """Truncation order too small: the reported tail bound exceeds the tolerance."""


class NonConvergenceError(QonkitError, RuntimeError):
    """Iterative summation failed to converge within the iteration cap."""


class SingularPointError(QonkitError, ValueError):
    """Evaluation at a point where the operation is singular."""


class AssociativityError(QonkitError, ValueError):
    """Nested wedge products disagree because the deformation matrix is not braided."""


class ConventionError(QonkitError, ValueError):
    """Operands built under incompatible algebraic conventions were mixed."""


class UnsolvableResolutionError(QonkitError, RuntimeError):
    """The resolution-of-identity system has no exact solution; carries the residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
