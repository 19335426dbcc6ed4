"""Exception types raised by the solvers."""


class DomainError(ValueError):
    """Input outside the domain of a potential or solver (r <= 0, non-finite values, ...)."""


class NetCoulombVanishes(ValueError):
    """ab + c - d == 0: the ansatz 1/r matching has no solution for B."""


class UnsupportedExcitedWavefunction(ValueError):
    """Closed-form wavefunctions exist only for the nodeless state n = 0."""


class SolverError(RuntimeError):
    pass


class NoBoundState(SolverError):
    """The energy bracket contains no level with the requested node count."""


class ConvergenceFailure(SolverError):
    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket
