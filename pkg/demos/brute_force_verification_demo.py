"""Brute-force verification of a locus construction, both directions.

A grid scan collects every point whose membership residual falls inside
a band and measures how far those points stray from the analytic locus;
points sampled on the locus are pushed back through the residual.  A
deliberately wrong radius makes the check fail loudly.
"""

from loci2d import (
    APOLLONIUS,
    Circle,
    GridSpec,
    LocusSpec,
    Point,
    Ratio,
    apollonius_locus,
    dist,
    residual_field,
    scan_predicate,
    verify_locus,
)

a, b = Point(0.0, 0.0), Point(5.0, 0.0)
span = dist(a, b)
ratio = Ratio(3, 2)

circle = apollonius_locus(a, b, ratio).locus
print(f"analytic locus: circle center ({circle.center.x}, {circle.center.y}) radius {circle.radius}")

spec = LocusSpec(APOLLONIUS, ratio)
field = residual_field(spec, a, b)
extent = 2.0 * (circle.radius + span)
grid = GridSpec(
    Point(circle.center.x - extent / 2.0, circle.center.y - extent / 2.0),
    Point(circle.center.x + extent / 2.0, circle.center.y + extent / 2.0),
    extent / 79.0,
)
print(f"grid: {grid.nx} x {grid.ny} samples, step {grid.step:.4f}")

band = 0.02 * span
hits = scan_predicate(field, grid, band)
print(f"scan: {len(hits)} grid points inside the residual band {band}")

report = verify_locus(circle, field, grid, band=band, residual_threshold=1e-9 * span)
print(f"verify (honest construction): passed={report.passed}")
print(f"  in-band points {report.samples_in_band}, "
      f"max distance to locus {report.max_distance_to_locus:.6f}")
print(f"  locus samples {report.locus_sample_count}, "
      f"max residual on locus {report.max_predicate_residual_on_locus:.3g}")
print()

bloated = Circle(circle.center, circle.radius * 1.05)
report = verify_locus(bloated, field, grid, band=band, residual_threshold=1e-9 * span)
print(f"verify (radius inflated by 5%): passed={report.passed}")
print(f"  max residual on claimed locus {report.max_predicate_residual_on_locus:.3g} "
      f"(threshold {1e-9 * span:.1g})")
