"""Triangle quantities and the squared-distance identities they satisfy.

Side naming follows the usual convention: a = BC, b = CA, c = AB, with
m_a the median to side a.  Everything here computes its result twice
where an identity provides a second route (median lengths, projections,
centroid sums) and raises InvariantViolation if the two routes diverge
beyond the tolerance profile; that keeps silent numerical breakdowns
from leaking into callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DegenerateTriangle, InvariantViolation
from .geom import (
    DEFAULT_TOL,
    Point,
    ToleranceProfile,
    dist,
    foot_of_perpendicular,
    line_through,
    midpoint,
)


class AtInfinity:
    """Sentinel for a construction point that escapes to infinity."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "AT_INFINITY"


AT_INFINITY = AtInfinity()

Foot = Union[Point, AtInfinity]

VERTICES = ("A", "B", "C")


@dataclass(frozen=True)
class Triangle:
    """Three non-collinear vertices."""

    va: Point
    vb: Point
    vc: Point

    def __post_init__(self) -> None:
        per = (
            dist(self.va, self.vb)
            + dist(self.vb, self.vc)
            + dist(self.vc, self.va)
        )
        twice_area = (self.vb.x - self.va.x) * (self.vc.y - self.va.y) - (
            self.vb.y - self.va.y
        ) * (self.vc.x - self.va.x)
        if abs(twice_area) <= DEFAULT_TOL.degeneracy_eps * per * per:
            raise DegenerateTriangle("vertices are collinear")

    @property
    def perimeter(self) -> float:
        return (
            dist(self.va, self.vb)
            + dist(self.vb, self.vc)
            + dist(self.vc, self.va)
        )


@dataclass(frozen=True)
class TriangleMetrics:
    """Side lengths, median lengths, centroid, circumcenter, circumradius."""

    a: float
    b: float
    c: float
    m_a: float
    m_b: float
    m_c: float
    centroid: Point
    circumcenter: Point
    circumradius: float

    @property
    def perimeter(self) -> float:
        return self.a + self.b + self.c


def _corner(t: Triangle, vertex: str) -> tuple[Point, Point, Point]:
    """(V, P, Q): the chosen vertex and its opposite side's endpoints,
    ordered so that cycling A -> B -> C rotates the roles."""
    if vertex == "A":
        return t.va, t.vb, t.vc
    if vertex == "B":
        return t.vb, t.vc, t.va
    if vertex == "C":
        return t.vc, t.va, t.vb
    raise ValueError(f"vertex must be one of {VERTICES}, got {vertex!r}")


def _check(actual: float, expected: float, budget: float, what: str) -> None:
    if abs(actual - expected) > budget:
        raise InvariantViolation(
            f"{what}: {actual!r} vs {expected!r} exceeds budget {budget!r}"
        )


def metrics(t: Triangle, tol: ToleranceProfile = DEFAULT_TOL) -> TriangleMetrics:
    """All derived quantities of a triangle.

    Median lengths are measured vertex-to-midpoint and cross-checked
    against 4*m^2 = 2u^2 + 2v^2 - w^2; the circumcenter is the
    perpendicular-bisector intersection, checked equidistant from all
    three vertices.
    """
    a = dist(t.vb, t.vc)
    b = dist(t.vc, t.va)
    c = dist(t.va, t.vb)
    per = a + b + c

    m_a = dist(t.va, midpoint(t.vb, t.vc))
    m_b = dist(t.vb, midpoint(t.vc, t.va))
    m_c = dist(t.vc, midpoint(t.va, t.vb))
    budget = tol.rel_eps * per * per
    _check(4.0 * m_a * m_a, 2.0 * b * b + 2.0 * c * c - a * a, budget, "median to side a")
    _check(4.0 * m_b * m_b, 2.0 * c * c + 2.0 * a * a - b * b, budget, "median to side b")
    _check(4.0 * m_c * m_c, 2.0 * a * a + 2.0 * b * b - c * c, budget, "median to side c")

    centroid = Point(
        (t.va.x + t.vb.x + t.vc.x) / 3.0,
        (t.va.y + t.vb.y + t.vc.y) / 3.0,
    )

    # Circumcenter O solves (B-A).O = (B-A).mid(A,B) and likewise for C.
    d1x, d1y = t.vb.x - t.va.x, t.vb.y - t.va.y
    d2x, d2y = t.vc.x - t.va.x, t.vc.y - t.va.y
    mab = midpoint(t.va, t.vb)
    mac = midpoint(t.va, t.vc)
    r1 = d1x * mab.x + d1y * mab.y
    r2 = d2x * mac.x + d2y * mac.y
    det = d1x * d2y - d1y * d2x
    circumcenter = Point((r1 * d2y - r2 * d1y) / det, (d1x * r2 - d2x * r1) / det)
    circumradius = dist(circumcenter, t.va)
    _check(dist(circumcenter, t.vb), circumradius, tol.rel_eps * circumradius, "circumradius via B")
    _check(dist(circumcenter, t.vc), circumradius, tol.rel_eps * circumradius, "circumradius via C")

    return TriangleMetrics(a, b, c, m_a, m_b, m_c, centroid, circumcenter, circumradius)


def median_projection(t: Triangle, vertex: str, tol: ToleranceProfile = DEFAULT_TOL) -> float:
    """Signed projection of the median from ``vertex`` onto the opposite side.

    Equals (VP^2 - VQ^2) / (2*PQ) where P, Q are the opposite side's
    endpoints in cyclic order; the sign is measured along P -> Q from
    the side's midpoint.  Cross-checked against an explicit
    foot-of-perpendicular construction.
    """
    v, p, q = _corner(t, vertex)
    vp = dist(v, p)
    vq = dist(v, q)
    pq = dist(p, q)
    n = (vp * vp - vq * vq) / (2.0 * pq)

    side = line_through(p, q, tol)
    h = foot_of_perpendicular(side, v)
    m = midpoint(p, q)
    geometric = (h.x - m.x) * side.direction[0] + (h.y - m.y) * side.direction[1]
    _check(n, geometric, tol.rel_eps * t.perimeter, "median projection")
    return n


def bisector_feet(
    t: Triangle, vertex: str, tol: ToleranceProfile = DEFAULT_TOL
) -> tuple[Point, Foot]:
    """Feet of the interior and exterior angle bisectors from ``vertex``.

    Both feet divide the opposite side (internally resp. externally) in
    the ratio of the adjacent sides.  When those sides are equal the
    exterior bisector is parallel to the opposite side and AT_INFINITY
    is returned in its place.
    """
    v, p, q = _corner(t, vertex)
    vp = dist(v, p)
    vq = dist(v, q)
    f = vp / (vp + vq)
    interior = Point(p.x + f * (q.x - p.x), p.y + f * (q.y - p.y))
    if abs(vp - vq) <= tol.rel_eps * max(vp, vq):
        return interior, AT_INFINITY
    g = vp / (vp - vq)
    exterior = Point(p.x + g * (q.x - p.x), p.y + g * (q.y - p.y))
    return interior, exterior


def sum_squared_medians(t: Triangle, tol: ToleranceProfile = DEFAULT_TOL) -> float:
    """m_a^2 + m_b^2 + m_c^2, checked against (3/4)(a^2 + b^2 + c^2)."""
    met = metrics(t, tol)
    total = met.m_a**2 + met.m_b**2 + met.m_c**2
    sides = met.a**2 + met.b**2 + met.c**2
    _check(total, 0.75 * sides, tol.rel_eps * met.perimeter**2, "sum of squared medians")
    return total


def centroid_sum_squares(t: Triangle, tol: ToleranceProfile = DEFAULT_TOL) -> float:
    """GA^2 + GB^2 + GC^2 for the centroid G.

    Checked against both (1/3)(a^2 + b^2 + c^2) and (4/9) of the sum of
    squared medians.
    """
    met = metrics(t, tol)
    g = met.centroid
    total = dist(g, t.va) ** 2 + dist(g, t.vb) ** 2 + dist(g, t.vc) ** 2
    sides = met.a**2 + met.b**2 + met.c**2
    medians = met.m_a**2 + met.m_b**2 + met.m_c**2
    budget = tol.rel_eps * met.perimeter**2
    _check(total, sides / 3.0, budget, "centroid sum vs sides")
    _check(total, 4.0 * medians / 9.0, budget, "centroid sum vs medians")
    return total


def leibniz_value(t: Triangle, x: Point, tol: ToleranceProfile = DEFAULT_TOL) -> float:
    """XA^2 + XB^2 + XC^2, checked against the centroid decomposition
    (GA^2 + GB^2 + GC^2) + 3*XG^2."""
    value = dist(x, t.va) ** 2 + dist(x, t.vb) ** 2 + dist(x, t.vc) ** 2
    g = Point(
        (t.va.x + t.vb.x + t.vc.x) / 3.0,
        (t.va.y + t.vb.y + t.vc.y) / 3.0,
    )
    at_g = dist(g, t.va) ** 2 + dist(g, t.vb) ** 2 + dist(g, t.vc) ** 2
    xg = dist(x, g)
    scale = t.perimeter + xg
    _check(value, at_g + 3.0 * xg * xg, tol.rel_eps * scale * scale, "centroid decomposition")
    return value


def circumcenter_centroid_gap(t: Triangle, tol: ToleranceProfile = DEFAULT_TOL) -> float:
    """OG^2 for circumcenter O and centroid G.

    Checked against R^2 - (a^2 + b^2 + c^2)/9.
    """
    met = metrics(t, tol)
    og2 = dist(met.circumcenter, met.centroid) ** 2
    sides = met.a**2 + met.b**2 + met.c**2
    expected = met.circumradius**2 - sides / 9.0
    _check(og2, expected, tol.rel_eps * met.circumradius**2, "circumcenter-centroid gap")
    return og2
