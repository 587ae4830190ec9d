"""Brute-force locus verification.

A residual function's zero set is compared against an analytic locus in
both directions: every grid point whose residual falls inside a band
must lie geometrically close to the locus, and points sampled on the
locus must have a tiny residual.  Scanning is vectorized over the whole
grid at once and enumerates hits in row-major order (increasing y, then
increasing x), so reports are deterministic regardless of how the
evaluation is chunked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GridTooLarge
from .geom import DEFAULT_TOL, Circle, Line, Point, ToleranceProfile, clip_line_to_box, dist
from .loci import Empty, Locus, ResidualField, SinglePoint, distance_to_locus

CIRCLE_SAMPLES = 360
LINE_SAMPLES = 100


def _axis_count(lo: float, hi: float, step: float) -> int:
    return int(math.floor((hi - lo) / step * (1.0 + 1e-12))) + 1


@dataclass(frozen=True)
class GridSpec:
    """Rectangular scan grid: corners plus a step, capped in total size."""

    min_corner: Point
    max_corner: Point
    step: float
    sample_cap: int = 10_000_000

    def __post_init__(self) -> None:
        if not (self.max_corner.x > self.min_corner.x and self.max_corner.y > self.min_corner.y):
            raise ValueError("grid corners must satisfy min < max on both axes")
        if not (math.isfinite(self.step) and self.step > 0.0):
            raise ValueError("grid step must be positive")
        if self.nx * self.ny > self.sample_cap:
            raise GridTooLarge(
                f"{self.nx} x {self.ny} samples exceed the cap of {self.sample_cap}"
            )

    @property
    def nx(self) -> int:
        return _axis_count(self.min_corner.x, self.max_corner.x, self.step)

    @property
    def ny(self) -> int:
        return _axis_count(self.min_corner.y, self.max_corner.y, self.step)

    def x_values(self) -> np.ndarray:
        return self.min_corner.x + self.step * np.arange(self.nx)

    def y_values(self) -> np.ndarray:
        return self.min_corner.y + self.step * np.arange(self.ny)


@dataclass(frozen=True)
class VerificationReport:
    """Aggregate of both verification directions.

    ``passed`` requires the in-band points to stay within the distance
    threshold, the on-locus residuals to stay within the residual
    threshold, and at least one in-band sample whenever a non-empty
    locus actually intersects the grid box.
    """

    samples_in_band: int
    max_distance_to_locus: float
    locus_sample_count: int
    max_predicate_residual_on_locus: float
    passed: bool


def scan_predicate(residual: ResidualField, grid: GridSpec, band: float) -> list[Point]:
    """All grid points with |residual| <= band, in row-major order."""
    xs = grid.x_values()
    ys = grid.y_values()
    gx, gy = np.meshgrid(xs, ys)
    values = np.asarray(residual(gx, gy), dtype=float)
    iy, ix = np.nonzero(np.abs(values) <= band)
    return [Point(float(xs[j]), float(ys[i])) for i, j in zip(iy, ix)]


def _circle_samples(circle: Circle) -> list[Point]:
    cx, cy, r = circle.center.x, circle.center.y, circle.radius
    step = 2.0 * math.pi / CIRCLE_SAMPLES
    return [
        Point(cx + r * math.cos(k * step), cy + r * math.sin(k * step))
        for k in range(CIRCLE_SAMPLES)
    ]


def _line_samples(line: Line, grid: GridSpec) -> list[Point]:
    clipped = clip_line_to_box(
        line, grid.min_corner.x, grid.min_corner.y, grid.max_corner.x, grid.max_corner.y
    )
    if clipped is None:
        return []
    p, q = clipped
    return [
        Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))
        for t in np.linspace(0.0, 1.0, LINE_SAMPLES)
    ]


def locus_samples(locus: Locus, grid: GridSpec) -> list[Point]:
    """Deterministic sample points on the locus (lines clipped to the box)."""
    if isinstance(locus, Circle):
        return _circle_samples(locus)
    if isinstance(locus, Line):
        return _line_samples(locus, grid)
    if isinstance(locus, SinglePoint):
        return [locus.point]
    return []


def _intersects_box(locus: Locus, grid: GridSpec) -> bool:
    xmin, ymin = grid.min_corner.x, grid.min_corner.y
    xmax, ymax = grid.max_corner.x, grid.max_corner.y
    if isinstance(locus, Circle):
        cx, cy = locus.center.x, locus.center.y
        gap_x = max(xmin - cx, 0.0, cx - xmax)
        gap_y = max(ymin - cy, 0.0, cy - ymax)
        nearest = math.hypot(gap_x, gap_y)
        farthest = max(
            math.hypot(cx - x, cy - y)
            for x in (xmin, xmax)
            for y in (ymin, ymax)
        )
        return nearest <= locus.radius <= farthest
    if isinstance(locus, Line):
        return clip_line_to_box(locus, xmin, ymin, xmax, ymax) is not None
    if isinstance(locus, SinglePoint):
        p = locus.point
        return xmin <= p.x <= xmax and ymin <= p.y <= ymax
    return False


def verify_locus(
    locus: Locus,
    residual: ResidualField,
    grid: GridSpec,
    tol: ToleranceProfile = DEFAULT_TOL,
    *,
    band: float,
    residual_threshold: float,
    distance_threshold: float | None = None,
) -> VerificationReport:
    """Two-directional set-equality check of a residual against a locus.

    ``band`` and ``residual_threshold`` are in residual units (length
    for the ratio locus, length squared otherwise); the distance
    threshold defaults to twice the grid step.
    """
    if distance_threshold is None:
        distance_threshold = 2.0 * grid.step

    in_band = scan_predicate(residual, grid, band)
    max_distance = 0.0
    for p in in_band:
        max_distance = max(max_distance, distance_to_locus(locus, p))

    samples = locus_samples(locus, grid)
    max_residual = 0.0
    for p in samples:
        max_residual = max(max_residual, abs(float(residual(p.x, p.y))))

    needs_hits = not isinstance(locus, Empty) and _intersects_box(locus, grid)
    passed = (
        max_distance <= distance_threshold
        and max_residual <= residual_threshold
        and (len(in_band) > 0 or not needs_hits)
    )
    return VerificationReport(
        samples_in_band=len(in_band),
        max_distance_to_locus=max_distance,
        locus_sample_count=len(samples),
        max_predicate_residual_on_locus=max_residual,
        passed=passed,
    )
