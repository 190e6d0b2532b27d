"""Exception types shared across the package.

Every error raised on purpose derives from ZetaLabError so callers (and the
CLI) can distinguish numerical/domain failures from genuine bugs.
"""


class ZetaLabError(Exception):
    """Base class for all domain and numerical errors raised by zetalab."""


class DomainError(ZetaLabError):
    """An argument lies outside the documented domain of an operation."""


class PoleError(ZetaLabError):
    """Gamma evaluated within tolerance of a non-positive integer pole."""


class ToleranceNotMet(ZetaLabError):
    """Adaptive quadrature exhausted its evaluation budget before reaching tol."""

    def __init__(self, message, value=None, abs_error=None, n_evals=None):
        super().__init__(message)
        self.value = value
        self.abs_error = abs_error
        self.n_evals = n_evals


class BoundaryZeroError(ZetaLabError):
    """A contour sample fell below the minimum modulus; winding is undefined."""


class NonConvergence(ZetaLabError):
    """Phase tracking could not be refined within the evaluation budget."""


class MultiplicityAmbiguity(ZetaLabError):
    """A zero-search cell at minimum size still contains more than one zero."""


class ZeroAtCenter(ZetaLabError):
    """Jensen check requires f(0) != 0."""


class BoundaryZero(ZetaLabError):
    """Jensen check requires no zeros on the circle |z| = R."""


class PoleProximity(ZetaLabError):
    """Blaschke product evaluated too close to one of its poles."""


class ZeroOnBoundary(ZetaLabError):
    """Rouche scan found |f| below the minimum modulus away from neutralized zeros."""
