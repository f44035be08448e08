"""Exception types shared across the package."""


class PdmSpectraError(Exception):
    """Base class for all library errors."""


class PoleError(PdmSpectraError):
    """Gamma function evaluated at (or within tolerance of) a pole."""


class DomainError(PdmSpectraError):
    """Input outside the mathematical domain of an operation."""


class SingularityError(PdmSpectraError):
    """Evaluation point coincides with a potential singularity."""


class GridAsymmetryError(PdmSpectraError):
    """Grid is not mirror-symmetric about the origin."""


class ConvergenceError(PdmSpectraError):
    """Iterative procedure failed to converge."""


class OutOfBoundStateRange(PdmSpectraError):
    """Requested level index lies outside the bound-state range."""


class NaNGuard(PdmSpectraError):
    """Non-finite or degenerate data where finite values are required."""
