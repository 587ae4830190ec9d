"""Plane primitives shared by every other module: points, segments,
lines, circles, and the tolerance profile that scales residual checks."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateSegment

Vec = tuple[float, float]


@dataclass(frozen=True)
class ToleranceProfile:
    """Epsilons for residual checks, membership bands and degeneracy tests.

    ``abs_eps`` is applied against an explicit length (or length-squared)
    scale, ``rel_eps`` against the magnitudes being compared, and
    ``degeneracy_eps`` guards constructions that divide by a length.
    """

    abs_eps: float = 1e-9
    rel_eps: float = 1e-9
    degeneracy_eps: float = 1e-12

    def __post_init__(self) -> None:
        if min(self.abs_eps, self.rel_eps, self.degeneracy_eps) <= 0.0:
            raise ValueError("tolerance epsilons must be strictly positive")
        if self.abs_eps < self.degeneracy_eps:
            raise ValueError("abs_eps must not be smaller than degeneracy_eps")


DEFAULT_TOL = ToleranceProfile()


def _require_finite(**coords: float) -> None:
    for name, value in coords.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class Point:
    """A position in the plane.  Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self) -> None:
        _require_finite(x=self.x, y=self.y)


@dataclass(frozen=True)
class Segment:
    """Two distinct endpoints; degenerate segments are rejected outright."""

    a: Point
    b: Point

    def __post_init__(self) -> None:
        if dist(self.a, self.b) <= DEFAULT_TOL.degeneracy_eps:
            raise DegenerateSegment("segment endpoints coincide")

    @property
    def length(self) -> float:
        return dist(self.a, self.b)


@dataclass(frozen=True)
class Line:
    """Infinite line through ``anchor`` along the unit vector ``direction``."""

    anchor: Point
    direction: Vec

    def __post_init__(self) -> None:
        dx, dy = self.direction
        _require_finite(dx=dx, dy=dy)
        if abs(math.hypot(dx, dy) - 1.0) > 1e-12:
            raise ValueError("line direction must have unit length")


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        _require_finite(radius=self.radius)
        if self.radius <= 0.0:
            raise ValueError("circle radius must be positive")


def dist(p: Point, q: Point) -> float:
    """Euclidean distance between two points."""
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2.0, (p.y + q.y) / 2.0)


def perpendicular_direction(direction: Vec) -> Vec:
    """Rotate a unit vector by +90 degrees."""
    dx, dy = direction
    return (-dy, dx)


def line_through(p: Point, q: Point, tol: ToleranceProfile = DEFAULT_TOL) -> Line:
    """Line through two distinct points, directed from ``p`` to ``q``."""
    d = dist(p, q)
    if d <= tol.degeneracy_eps:
        raise DegenerateSegment("cannot span a line between coincident points")
    return Line(p, ((q.x - p.x) / d, (q.y - p.y) / d))


def foot_of_perpendicular(line: Line, p: Point) -> Point:
    """Orthogonal projection of ``p`` onto ``line``."""
    dx, dy = line.direction
    t = (p.x - line.anchor.x) * dx + (p.y - line.anchor.y) * dy
    return Point(line.anchor.x + t * dx, line.anchor.y + t * dy)


def line_point_distance(line: Line, p: Point) -> float:
    dx, dy = line.direction
    return abs((p.x - line.anchor.x) * dy - (p.y - line.anchor.y) * dx)


def approx_eq(u: float, v: float, scale: float, tol: ToleranceProfile = DEFAULT_TOL) -> bool:
    """Mixed absolute/relative comparison; ``scale`` anchors the absolute part."""
    if scale <= 0.0:
        raise ValueError("scale must be positive")
    return abs(u - v) <= tol.abs_eps * scale + tol.rel_eps * max(abs(u), abs(v))


def clip_line_to_box(
    line: Line, xmin: float, ymin: float, xmax: float, ymax: float
) -> tuple[Point, Point] | None:
    """Segment of ``line`` inside an axis-aligned box, or None if it misses."""
    ax, ay = line.anchor.x, line.anchor.y
    dx, dy = line.direction
    t_lo, t_hi = -math.inf, math.inf
    for pos, d, lo, hi in ((ax, dx, xmin, xmax), (ay, dy, ymin, ymax)):
        if abs(d) < 1e-15:
            if pos < lo or pos > hi:
                return None
            continue
        ta, tb = (lo - pos) / d, (hi - pos) / d
        if ta > tb:
            ta, tb = tb, ta
        t_lo, t_hi = max(t_lo, ta), min(t_hi, tb)
    if t_lo > t_hi:
        return None
    return (
        Point(ax + t_lo * dx, ay + t_lo * dy),
        Point(ax + t_hi * dx, ay + t_hi * dy),
    )
