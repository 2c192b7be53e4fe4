"""Package-wide exception types."""

__all__ = ["SelfCheckError"]


class SelfCheckError(RuntimeError):
    """An internal consistency check failed.

    Raised when a result violates an invariant the implementation
    guarantees by construction (exactness of integer arithmetic, solver
    residual bounds, certified bracketing).  Indicates a defect, not bad
    user input.
    """
