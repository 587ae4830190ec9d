"""The two quadratic loci: MA^2 + MB^2 = k2 and MA^2 - MB^2 = c.

The sum locus is a circle on the midpoint of AB that collapses to the
midpoint at k2 = AB^2/2 and vanishes below it; the difference locus is
a line perpendicular to AB whose offset grows linearly with c.
"""

from loci2d import Circle, Empty, Point, SinglePoint, diff_squares_locus, dist, sum_squares_locus

A = Point(0.0, 0.0)
B = Point(4.0, 0.0)
span = dist(A, B)

print(f"anchors AB = {span}, collapse threshold k2 = AB^2/2 = {span * span / 2.0}")
print()
print("sum locus across k2:")
for k2 in (2.0, 6.0, 8.0, 10.0, 16.0, 24.0):
    locus = sum_squares_locus(A, B, k2)
    if isinstance(locus, Empty):
        shape = "empty"
    elif isinstance(locus, SinglePoint):
        shape = f"single point ({locus.point.x}, {locus.point.y})"
    else:
        assert isinstance(locus, Circle)
        shape = f"circle r = {locus.radius:.6f}"
        if abs(k2 - span * span) < 1e-12:
            shape += "   (k = AB: the circle on AB as diameter)"
    print(f"  k2 = {k2:>5.1f}  ->  {shape}")
print()

print("difference locus across c (signed along A->B from the midpoint):")
for c in (-16.0, -8.0, 0.0, 8.0, 16.0):
    line = diff_squares_locus(A, B, c)
    offset = line.anchor.x - 2.0
    note = ""
    if c == 0.0:
        note = "   (perpendicular bisector)"
    elif abs(c - span * span) < 1e-12:
        note = "   (c = AB^2: passes through B)"
    print(f"  c = {c:>6.1f}  ->  vertical line x = {line.anchor.x:.3f}, offset {offset:+.3f}{note}")
