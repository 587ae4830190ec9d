"""Division of a segment in a fixed distance ratio.

For anchors A, B and a positive ratio r, the internal division point P
sits between A and B with PA/PB = r, and the external division point Q
sits on the line through A and B outside the segment with QA/QB = r.
Together (P, Q) form the harmonic conjugate pair of A, B for r: their
signed cross-ratio with A, B is -1.  For r = 1 only the internal point
exists (the midpoint); the external one escapes to infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateSegment, NonPositiveRatio, PoleAtB, UnitRatio
from .geom import DEFAULT_TOL, Point, ToleranceProfile, dist


@dataclass(frozen=True)
class Ratio:
    """Positive ratio m/n.  Integer pairs keep expected values exact."""

    m: float
    n: float = 1

    def __post_init__(self) -> None:
        ok = (
            math.isfinite(self.m)
            and math.isfinite(self.n)
            and self.m > 0
            and self.n > 0
        )
        if not ok:
            raise NonPositiveRatio(f"ratio components must be positive: {self.m}/{self.n}")

    @property
    def value(self) -> float:
        return self.m / self.n


RatioLike = Ratio | float | int


def as_ratio(r: RatioLike) -> Ratio:
    if isinstance(r, Ratio):
        return r
    return Ratio(r)


@dataclass(frozen=True)
class ConjugatePair:
    """Internal and external division points for the same ratio."""

    internal: Point
    external: Point


def _span(a: Point, b: Point, tol: ToleranceProfile) -> float:
    d = dist(a, b)
    if d <= tol.degeneracy_eps:
        raise DegenerateSegment("anchor points coincide")
    return d


def divide_internal(a: Point, b: Point, r: RatioLike, tol: ToleranceProfile = DEFAULT_TOL) -> Point:
    """Point P between ``a`` and ``b`` with dist(P,a)/dist(P,b) = r."""
    _span(a, b, tol)
    lam = as_ratio(r).value
    f = lam / (1.0 + lam)
    return Point(a.x + f * (b.x - a.x), a.y + f * (b.y - a.y))


def divide_external(a: Point, b: Point, r: RatioLike, tol: ToleranceProfile = DEFAULT_TOL) -> Point:
    """Point Q on line ab, outside the segment, with dist(Q,a)/dist(Q,b) = r.

    Q lies beyond ``b`` for r > 1 and beyond ``a`` for r < 1.  Raises
    UnitRatio for r = 1 (within rel_eps), where Q has no finite position.
    """
    _span(a, b, tol)
    lam = as_ratio(r).value
    if abs(lam - 1.0) <= tol.rel_eps:
        raise UnitRatio("external division point is at infinity for ratio 1")
    f = lam / (lam - 1.0)
    return Point(a.x + f * (b.x - a.x), a.y + f * (b.y - a.y))


def harmonic_conjugates(
    a: Point, b: Point, r: RatioLike, tol: ToleranceProfile = DEFAULT_TOL
) -> ConjugatePair:
    """The (internal, external) division pair of ``a``, ``b`` for ratio ``r``."""
    return ConjugatePair(
        divide_internal(a, b, r, tol),
        divide_external(a, b, r, tol),
    )


def ratio_at(a: Point, b: Point, x: Point, tol: ToleranceProfile = DEFAULT_TOL) -> float:
    """dist(x,a) / dist(x,b); zero exactly at ``a``, a pole at ``b``."""
    span = _span(a, b, tol)
    to_b = dist(x, b)
    if to_b < tol.degeneracy_eps * span:
        raise PoleAtB("ratio is unbounded at the second anchor")
    return dist(x, a) / to_b
