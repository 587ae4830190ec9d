"""Exception types shared across the package."""


class GeometryError(ValueError):
    """Base class for geometric domain errors."""


class DegenerateSegment(GeometryError):
    """Two anchor points coincide within the degeneracy epsilon."""


class DegenerateTriangle(GeometryError):
    """Triangle vertices are collinear within the degeneracy epsilon."""


class UnitRatio(GeometryError):
    """Distance ratio is 1: the external division point is at infinity."""


class PoleAtB(GeometryError):
    """Ratio evaluated at (or too close to) the second anchor point."""


class NonPositiveRatio(GeometryError):
    """Ratio components must be positive and finite."""


class NegativeConstant(GeometryError):
    """A sum-of-squares constant must be nonnegative."""


class GridTooLarge(GeometryError):
    """Grid sample count exceeds the configured cap."""


class WindowDegenerate(GeometryError):
    """Render window has zero extent."""


class InvariantViolation(GeometryError):
    """A built-in cross-check between two computations of the same
    quantity failed; indicates numerical breakdown, not bad input."""
