"""Squared-distance identities of a triangle, checked numerically.

Uses the 3-4-5 right triangle so every quantity has a recognizable
value, then repeats the checks on a random triangle to show they are
not an artifact of the example.
"""

import random

from loci2d import (
    Point,
    Triangle,
    bisector_feet,
    centroid_sum_squares,
    circumcenter_centroid_gap,
    dist,
    leibniz_value,
    median_projection,
    metrics,
    sum_squared_medians,
)


def show(tri: Triangle, label: str) -> None:
    met = metrics(tri)
    sides2 = met.a**2 + met.b**2 + met.c**2
    print(f"{label}: sides a={met.a:.6f} b={met.b:.6f} c={met.c:.6f}")
    print(f"  medians            {met.m_a:.6f} {met.m_b:.6f} {met.m_c:.6f}")
    print(f"  median identity    b^2+c^2 = {met.b**2 + met.c**2:.9f}"
          f"  vs  2*m_a^2 + a^2/2 = {2 * met.m_a**2 + met.a**2 / 2:.9f}")
    print(f"  projection at A    {median_projection(tri, 'A'):+.9f}"
          f"  (= (c^2-b^2)/(2a) = {(met.c**2 - met.b**2) / (2 * met.a):+.9f})")
    print(f"  sum sq medians     {sum_squared_medians(tri):.9f}"
          f"  vs  (3/4)*sum sq sides = {0.75 * sides2:.9f}")
    print(f"  centroid sum       {centroid_sum_squares(tri):.9f}"
          f"  vs  sum sq sides / 3 = {sides2 / 3.0:.9f}")
    x = Point(tri.va.x + 1.0, tri.va.y - 2.0)
    g = met.centroid
    print(f"  probe X            XA^2+XB^2+XC^2 = {leibniz_value(tri, x):.9f}"
          f"  vs  centroid sum + 3*XG^2 = "
          f"{centroid_sum_squares(tri) + 3 * dist(x, g)**2:.9f}")
    print(f"  circumcenter gap   OG^2 = {circumcenter_centroid_gap(tri):.9f}"
          f"  vs  R^2 - sum/9 = {met.circumradius**2 - sides2 / 9.0:.9f}")
    interior, exterior = bisector_feet(tri, "A")
    print(f"  bisector feet at A interior ({interior.x:+.6f}, {interior.y:+.6f}),"
          f" exterior {exterior!r}")
    print()


show(Triangle(Point(0, 0), Point(4, 0), Point(0, 3)), "3-4-5 right triangle")

rng = random.Random(7)
corners = [Point(rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(3)]
show(Triangle(*corners), "random triangle")
