"""Exception types shared across the package."""


class BlockadeError(Exception):
    """Base class for structured algebra/solver failures."""


class DimensionMismatchError(BlockadeError):
    """Operands live on incompatible Hilbert spaces."""


class SingularSystemError(BlockadeError):
    """A linear system was singular or too ill-conditioned to trust."""


class DegenerateSteadyStateError(BlockadeError):
    """The Liouvillian null space has more than one dimension."""


class SteadyStateResidualError(BlockadeError):
    """The steady-state solve missed the required residual bound."""

    def __init__(self, residual: float, tol: float):
        super().__init__(
            f"steady-state residual {residual:.3e} exceeds tolerance {tol:.1e}"
        )
        self.residual = residual
        self.tol = tol


class CutoffConvergenceError(BlockadeError):
    """Observables failed to settle within the allowed Fock cutoffs."""


class UndefinedCorrelationError(BlockadeError):
    """g2(0) requested for a state with (numerically) zero photons."""
