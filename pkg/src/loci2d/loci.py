"""Constructors and membership residuals for the three two-point loci.

For fixed anchors A and B:

* ``apollonius_locus`` -- points X with XA/XB equal to a fixed positive
  ratio.  A circle whose diameter joins the two harmonic conjugates of
  A, B for that ratio; the perpendicular bisector of AB when the ratio
  is 1.
* ``sum_squares_locus`` -- points M with MA^2 + MB^2 equal to a
  constant.  A circle centred on the midpoint of AB that shrinks to the
  midpoint itself and then to nothing as the constant decreases.
* ``diff_squares_locus`` -- points M with MA^2 - MB^2 equal to a signed
  constant.  A line perpendicular to AB, offset from the midpoint along
  the A-to-B direction.

Each locus kind has a scalar residual whose zero set is exactly the
locus; the oracle module scans those residuals over a grid to verify
the constructions by brute force.  The residual for the ratio locus is
XA - r*XB rather than the quotient XA/XB - r, so it stays bounded at B.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DegenerateSegment, NegativeConstant
from .geom import (
    DEFAULT_TOL,
    Circle,
    Line,
    Point,
    ToleranceProfile,
    dist,
    line_point_distance,
    line_through,
    midpoint,
    perpendicular_direction,
)
from .harmonic import ConjugatePair, Ratio, RatioLike, as_ratio, harmonic_conjugates


@dataclass(frozen=True)
class SinglePoint:
    """A locus that has collapsed to one point."""

    point: Point


@dataclass(frozen=True)
class Empty:
    """A locus with no points at all."""


Locus = Circle | Line | SinglePoint | Empty

APOLLONIUS = "apollonius"
SUM_SQUARES = "sumsq"
DIFF_SQUARES = "diffsq"
LOCUS_KINDS = (APOLLONIUS, SUM_SQUARES, DIFF_SQUARES)

ResidualField = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class LocusSpec:
    """A locus kind plus its scalar parameter (ratio or constant)."""

    kind: str
    param: Ratio | float

    def __post_init__(self) -> None:
        if self.kind not in LOCUS_KINDS:
            raise ValueError(f"unknown locus kind {self.kind!r}")


@dataclass(frozen=True)
class ApolloniusResult:
    """Constructed ratio locus plus its closed-form measurements.

    For a circle, ``radius`` equals m*n*AB / |m^2 - n^2| and the center
    sits at distance m^2*AB / |m^2 - n^2| from A (``center_offset_ao``)
    and n^2*AB / |m^2 - n^2| from B (``center_offset_ob``).  For the
    ratio-1 perpendicular bisector those fields are None.
    """

    locus: Locus
    conjugates: ConjugatePair | None
    center_offset_ao: float | None
    center_offset_ob: float | None
    radius: float | None


def _span(a: Point, b: Point, tol: ToleranceProfile) -> float:
    d = dist(a, b)
    if d <= tol.degeneracy_eps:
        raise DegenerateSegment("anchor points coincide")
    return d


def apollonius_locus(
    a: Point, b: Point, r: RatioLike, tol: ToleranceProfile = DEFAULT_TOL
) -> ApolloniusResult:
    """Locus of points whose distance ratio to ``a`` and ``b`` is ``r``.

    The circle is built on the harmonic conjugate pair as diameter; a
    ratio of 1 (within rel_eps) yields the perpendicular bisector.
    """
    _span(a, b, tol)
    lam = as_ratio(r).value
    if abs(lam - 1.0) <= tol.rel_eps:
        axis = line_through(a, b, tol)
        bisector = Line(midpoint(a, b), perpendicular_direction(axis.direction))
        return ApolloniusResult(bisector, None, None, None, None)
    pair = harmonic_conjugates(a, b, r, tol)
    center = midpoint(pair.internal, pair.external)
    radius = dist(pair.internal, pair.external) / 2.0
    return ApolloniusResult(
        Circle(center, radius),
        pair,
        dist(a, center),
        dist(center, b),
        radius,
    )


def sum_squares_locus(
    a: Point, b: Point, k2: float, tol: ToleranceProfile = DEFAULT_TOL
) -> Locus:
    """Locus of points M with MA^2 + MB^2 = k2.

    Circle around the midpoint of ab when k2 is large enough, the
    midpoint alone at the threshold k2 = AB^2/2, nothing below it.
    """
    span = _span(a, b, tol)
    if k2 < 0.0:
        raise NegativeConstant("sum of squared distances cannot be negative")
    square = k2 / 2.0 - span * span / 4.0
    if abs(square) <= tol.abs_eps * span * span:
        return SinglePoint(midpoint(a, b))
    if square < 0.0:
        return Empty()
    return Circle(midpoint(a, b), math.sqrt(square))


def diff_squares_locus(
    a: Point, b: Point, c: float, tol: ToleranceProfile = DEFAULT_TOL
) -> Line:
    """Locus of points M with MA^2 - MB^2 = c (any sign).

    A line perpendicular to ab through the point offset c/(2*AB) from
    the midpoint along the a-to-b direction; c = 0 gives the
    perpendicular bisector.
    """
    span = _span(a, b, tol)
    if not math.isfinite(c):
        raise ValueError("difference constant must be finite")
    axis = line_through(a, b, tol)
    offset = c / (2.0 * span)
    mid = midpoint(a, b)
    anchor = Point(mid.x + offset * axis.direction[0], mid.y + offset * axis.direction[1])
    return Line(anchor, perpendicular_direction(axis.direction))


def build_locus(
    spec: LocusSpec, a: Point, b: Point, tol: ToleranceProfile = DEFAULT_TOL
) -> Locus:
    """Dispatch a LocusSpec to the matching constructor."""
    if spec.kind == APOLLONIUS:
        return apollonius_locus(a, b, spec.param, tol).locus
    if spec.kind == SUM_SQUARES:
        return sum_squares_locus(a, b, float(spec.param), tol)
    return diff_squares_locus(a, b, float(spec.param), tol)


def residual_field(
    spec: LocusSpec, a: Point, b: Point, tol: ToleranceProfile = DEFAULT_TOL
) -> ResidualField:
    """Vectorized residual for a locus: zero exactly on the locus.

    The returned callable accepts scalar coordinates or equally shaped
    numpy arrays.  Residual units are length for the ratio locus and
    length squared for the other two kinds.
    """
    _span(a, b, tol)
    ax, ay, bx, by = a.x, a.y, b.x, b.y
    if spec.kind == APOLLONIUS:
        lam = as_ratio(spec.param).value

        def field(xs, ys):
            return np.hypot(xs - ax, ys - ay) - lam * np.hypot(xs - bx, ys - by)

    elif spec.kind == SUM_SQUARES:
        k2 = float(spec.param)

        def field(xs, ys):
            return (xs - ax) ** 2 + (ys - ay) ** 2 + (xs - bx) ** 2 + (ys - by) ** 2 - k2

    else:
        c = float(spec.param)

        def field(xs, ys):
            return (xs - ax) ** 2 + (ys - ay) ** 2 - (xs - bx) ** 2 - (ys - by) ** 2 - c

    return field


def membership_residual(
    spec: LocusSpec, a: Point, b: Point, x: Point, tol: ToleranceProfile = DEFAULT_TOL
) -> float:
    """Scalar residual of ``x`` against the locus defined by ``spec``."""
    return float(residual_field(spec, a, b, tol)(x.x, x.y))


def distance_to_locus(locus: Locus, x: Point) -> float:
    """Geometric distance from ``x`` to the locus point set."""
    if isinstance(locus, Circle):
        return abs(dist(x, locus.center) - locus.radius)
    if isinstance(locus, Line):
        return line_point_distance(locus, x)
    if isinstance(locus, SinglePoint):
        return dist(x, locus.point)
    return math.inf


def locus_contains(
    locus: Locus, x: Point, tol: ToleranceProfile = DEFAULT_TOL, scale: float = 1.0
) -> bool:
    """Whether ``x`` lies within abs_eps*scale of the locus point set."""
    if scale <= 0.0:
        raise ValueError("scale must be positive")
    return distance_to_locus(locus, x) <= tol.abs_eps * scale
