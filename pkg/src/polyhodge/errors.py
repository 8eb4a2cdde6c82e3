"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies on (or too close to) the singular locus of the requested function."""


class PathGeometryError(ValueError):
    """An integration path runs too close to a singularity of the integrand."""


class TransportAccuracyError(RuntimeError):
    """Parallel transport did not resolve an integer monodromy matrix."""


class ConstructionError(RuntimeError):
    """A structural invariant failed beyond tolerance while building an object."""
