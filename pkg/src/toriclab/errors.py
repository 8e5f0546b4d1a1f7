"""Shared exception and warning types."""

from __future__ import annotations


class ToricLabError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(ToricLabError, ValueError):
    """An argument is outside its documented range (negative epsilon, s <= 0, ...)."""


class InsufficientDataError(ToricLabError, ValueError):
    """Not enough samples to perform a fit or a liminf estimate."""


class InvalidComplexError(ToricLabError, ValueError):
    """Boundary data violates d^2 = 0 or strict filtration decrease."""


class SpectralValueError(ToricLabError, ValueError):
    """A query value collides with a spectrum/action value within tolerance."""


class DomainError(ToricLabError, ValueError):
    """A point is outside the domain of definition (off-simplex direction, ...)."""


class UnsupportedOperationError(ToricLabError, RuntimeError):
    """Operation not defined for this descriptor class (e.g. gradient of a nonsmooth f)."""


class MarginError(ToricLabError, ValueError):
    """Requested smoothing/evaluation leaves the sampled margin of the field."""


class SmoothingFailureError(ToricLabError, RuntimeError):
    """Mollified field failed a certification check (radial derivative, convexity spot check)."""


class InconsistentSurfaceError(ToricLabError, RuntimeError):
    """Level-set extraction could not bracket a unique root along a ray."""


class ExtensionUnavailableError(ToricLabError, ValueError):
    """Descriptor has no usable extension beyond the closed positive simplex."""


class NoRegularPerturbationError(ToricLabError, RuntimeError):
    """Perturbation search exhausted its budget without regularizing all rational directions."""


class PreconditionError(ToricLabError, ValueError):
    """A documented operation precondition does not hold for the given inputs."""


class IncompleteEnumerationWarning(UserWarning):
    """Enumeration may have missed classes (Newton non-convergence, budget cut)."""


class DegenerateClassWarning(UserWarning):
    """A flat boundary piece produced a degenerate (non-isolated) orbit class."""
