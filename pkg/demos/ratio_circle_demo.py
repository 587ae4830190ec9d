"""Walk through the distance-ratio circle for a pair of anchor points.

For anchors A, B and a ratio r, the points X with XA/XB = r form a
circle whose diameter joins the internal and external division points
of AB for r.  This script builds a few of those circles, prints the
closed-form measurements, and spot-checks the ratio at sampled points.
"""

import math

from loci2d import Point, Ratio, apollonius_locus, dist, ratio_at

A = Point(0.0, 0.0)
B = Point(5.0, 0.0)

print(f"anchors: A=({A.x}, {A.y})  B=({B.x}, {B.y})  AB={dist(A, B)}")
print()

for m, n in ((3, 2), (2, 1), (2, 5), (9, 10)):
    result = apollonius_locus(A, B, Ratio(m, n))
    circle = result.locus
    pair = result.conjugates
    print(f"ratio {m}/{n}:")
    print(f"  center    ({circle.center.x:+.6f}, {circle.center.y:+.6f})")
    print(f"  radius     {circle.radius:.6f}   (= {m}*{n}*AB/|{m}^2-{n}^2|)")
    print(f"  offsets    A->center {result.center_offset_ao:.6f}, center->B {result.center_offset_ob:.6f}")
    print(f"  conjugates P=({pair.internal.x:+.6f}, {pair.internal.y:+.6f})"
          f"  Q=({pair.external.x:+.6f}, {pair.external.y:+.6f})")

    # the ratio really is constant around the circle
    samples = [
        Point(
            circle.center.x + circle.radius * math.cos(theta),
            circle.center.y + circle.radius * math.sin(theta),
        )
        for theta in (0.3, 1.7, 2.9, 4.4)
    ]
    ratios = ", ".join(f"{ratio_at(A, B, p):.12f}" for p in samples)
    print(f"  sampled XA/XB: {ratios}")
    print()

print("ratio 1 has no circle; the locus flattens into the perpendicular bisector:")
mediatrix = apollonius_locus(A, B, 1.0).locus
print(f"  line through ({mediatrix.anchor.x}, {mediatrix.anchor.y}) "
      f"with direction {mediatrix.direction}")
