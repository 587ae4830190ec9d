import math
import random

import pytest

from loci2d import (
    AT_INFINITY,
    DegenerateTriangle,
    Point,
    Triangle,
    bisector_feet,
    centroid_sum_squares,
    circumcenter_centroid_gap,
    dist,
    leibniz_value,
    median_projection,
    metrics,
    midpoint,
    sum_squared_medians,
)
from support import random_point, random_triangle, rigid_motion

RIGHT = Triangle(Point(0, 0), Point(4, 0), Point(0, 3))


def intersect_lines(p1: Point, d1: tuple, p2: Point, d2: tuple) -> Point:
    det = d1[0] * d2[1] - d1[1] * d2[0]
    t = ((p2.x - p1.x) * d2[1] - (p2.y - p1.y) * d2[0]) / det
    return Point(p1.x + t * d1[0], p1.y + t * d1[1])


def bisector_foot_oracle(v: Point, p: Point, q: Point, exterior: bool) -> Point:
    """Independent construction: intersect the actual angle-bisector line
    from v with the line through p and q."""
    vp, vq = dist(v, p), dist(v, q)
    up = ((p.x - v.x) / vp, (p.y - v.y) / vp)
    uq = ((q.x - v.x) / vq, (q.y - v.y) / vq)
    if exterior:
        w = (up[0] - uq[0], up[1] - uq[1])
    else:
        w = (up[0] + uq[0], up[1] + uq[1])
    return intersect_lines(v, w, p, (q.x - p.x, q.y - p.y))


def test_metrics_right_triangle():
    met = metrics(RIGHT)
    assert (met.a, met.b, met.c) == pytest.approx((5.0, 3.0, 4.0), abs=1e-12)
    assert met.m_a == pytest.approx(2.5, abs=1e-12)
    assert (met.centroid.x, met.centroid.y) == pytest.approx((4.0 / 3.0, 1.0), rel=1e-14)
    # circumcenter of a right triangle is the hypotenuse midpoint
    assert (met.circumcenter.x, met.circumcenter.y) == pytest.approx((2.0, 1.5), abs=1e-12)
    assert met.circumradius == pytest.approx(2.5, abs=1e-12)
    # median identity at this triangle: b^2 + c^2 = 2 m_a^2 + a^2/2
    assert met.b**2 + met.c**2 == pytest.approx(2.0 * met.m_a**2 + met.a**2 / 2.0, abs=1e-12)


def test_metrics_equilateral():
    side = 2.0
    tri = Triangle(Point(0, 0), Point(side, 0), Point(side / 2.0, side * math.sqrt(3.0) / 2.0))
    met = metrics(tri)
    for m in (met.m_a, met.m_b, met.m_c):
        assert m == pytest.approx(math.sqrt(3.0), rel=1e-14)


def test_degenerate_triangle_rejected():
    with pytest.raises(DegenerateTriangle):
        Triangle(Point(0, 0), Point(1, 1), Point(2, 2))


def test_median_projection_examples():
    assert median_projection(RIGHT, "A") == pytest.approx(0.7, abs=1e-12)
    # geometric oracle: midpoint of BC is (2,1.5); the foot of the
    # perpendicular from A onto BC is (1.44,1.92); their distance is 0.7
    m = midpoint(Point(4, 0), Point(0, 3))
    h = Point(1.44, 1.92)
    assert dist(m, h) == pytest.approx(0.7, abs=1e-12)

    iso = Triangle(Point(2, 5), Point(0, 0), Point(4, 0))
    assert median_projection(iso, "A") == pytest.approx(0.0, abs=1e-12)

    # cyclic roles for vertex C: (b^2 - a^2) / (2c) = (9 - 25) / 8
    assert median_projection(RIGHT, "C") == pytest.approx(-2.0, abs=1e-12)


def test_median_projection_matches_brute_force_feet():
    rng = random.Random(41)
    for _ in range(200):
        tri = random_triangle(rng)
        per = tri.perimeter
        for vertex, (v, p, q) in (
            ("A", (tri.va, tri.vb, tri.vc)),
            ("B", (tri.vb, tri.vc, tri.va)),
            ("C", (tri.vc, tri.va, tri.vb)),
        ):
            n = median_projection(tri, vertex)
            pq = dist(p, q)
            u = ((q.x - p.x) / pq, (q.y - p.y) / pq)
            t = (v.x - p.x) * u[0] + (v.y - p.y) * u[1]
            h = Point(p.x + t * u[0], p.y + t * u[1])
            m = midpoint(p, q)
            geometric = (h.x - m.x) * u[0] + (h.y - m.y) * u[1]
            assert abs(n - geometric) <= 1e-9 * per


def test_bisector_feet_example():
    tri = Triangle(Point(0, 3), Point(0, 0), Point(4, 0))
    interior, exterior = bisector_feet(tri, "A")
    assert (interior.x, interior.y) == pytest.approx((1.5, 0.0), abs=1e-12)
    assert (exterior.x, exterior.y) == pytest.approx((-6.0, 0.0), abs=1e-12)
    # ratios 1.5/2.5 and 6/10 both equal the adjacent-side ratio 3/5
    b, c = Point(0, 0), Point(4, 0)
    assert dist(interior, b) / dist(interior, c) == pytest.approx(0.6, rel=1e-12)
    assert dist(exterior, b) / dist(exterior, c) == pytest.approx(0.6, rel=1e-12)


def test_bisector_feet_isoceles_exterior_at_infinity():
    iso = Triangle(Point(2, 5), Point(0, 0), Point(4, 0))
    interior, exterior = bisector_feet(iso, "A")
    assert dist(interior, Point(2, 0)) <= 1e-12
    assert exterior is AT_INFINITY


def test_bisector_feet_against_ray_oracle():
    rng = random.Random(42)
    for _ in range(200):
        tri = random_triangle(rng)
        per = tri.perimeter
        for vertex, (v, p, q) in (
            ("A", (tri.va, tri.vb, tri.vc)),
            ("B", (tri.vb, tri.vc, tri.va)),
            ("C", (tri.vc, tri.va, tri.vb)),
        ):
            interior, exterior = bisector_feet(tri, vertex)
            oracle = bisector_foot_oracle(v, p, q, exterior=False)
            assert dist(interior, oracle) <= 1e-9 * per
            vp, vq = dist(v, p), dist(v, q)
            if exterior is not AT_INFINITY and abs(vp - vq) > 0.05 * max(vp, vq):
                oracle = bisector_foot_oracle(v, p, q, exterior=True)
                reach = per + dist(exterior, v)
                assert dist(exterior, oracle) <= 1e-9 * reach


def test_sum_squared_medians_examples():
    assert sum_squared_medians(RIGHT) == pytest.approx(37.5, rel=1e-14)
    side = 2.0
    tri = Triangle(Point(0, 0), Point(side, 0), Point(side / 2.0, side * math.sqrt(3.0) / 2.0))
    assert sum_squared_medians(tri) == pytest.approx(9.0 / 4.0 * side * side, rel=1e-12)


def test_sum_squared_medians_rigid_motion_invariant():
    rng = random.Random(43)
    tri = Triangle(Point(0, 0), Point(2, 0), Point(1, math.sqrt(3.0)))
    reference = sum_squared_medians(tri)
    for _ in range(50):
        move = rigid_motion(rng)
        moved = Triangle(move(tri.va), move(tri.vb), move(tri.vc))
        assert sum_squared_medians(moved) == pytest.approx(reference, rel=1e-12)


def test_centroid_sum_squares_examples():
    assert centroid_sum_squares(RIGHT) == pytest.approx(50.0 / 3.0, rel=1e-14)
    side = 3.0
    tri = Triangle(Point(0, 0), Point(side, 0), Point(side / 2.0, side * math.sqrt(3.0) / 2.0))
    assert centroid_sum_squares(tri) == pytest.approx(side * side, rel=1e-12)


def test_centroid_sum_squares_thin_triangle():
    thin = Triangle(Point(0, 0), Point(4, 0), Point(2, 1e-7))
    total = centroid_sum_squares(thin)
    met = metrics(thin)
    sides = met.a**2 + met.b**2 + met.c**2
    assert total == pytest.approx(sides / 3.0, rel=1e-9)


def test_centroid_distance_is_two_thirds_of_median():
    rng = random.Random(44)
    for _ in range(200):
        tri = random_triangle(rng)
        met = metrics(tri)
        g = met.centroid
        assert dist(g, tri.va) == pytest.approx(2.0 / 3.0 * met.m_a, rel=1e-9)
        assert dist(g, tri.vb) == pytest.approx(2.0 / 3.0 * met.m_b, rel=1e-9)
        assert dist(g, tri.vc) == pytest.approx(2.0 / 3.0 * met.m_c, rel=1e-9)


def test_leibniz_value_examples():
    # at vertex A: XG^2 = (4/3)^2 + 1 = 25/9 and the total is 25
    assert leibniz_value(RIGHT, Point(0, 0)) == pytest.approx(25.0, rel=1e-14)
    g = metrics(RIGHT).centroid
    assert leibniz_value(RIGHT, g) == pytest.approx(centroid_sum_squares(RIGHT), rel=1e-12)


def test_leibniz_identity_random_sweep():
    rng = random.Random(45)
    for _ in range(300):
        tri = random_triangle(rng)
        x = random_point(rng, -30.0, 30.0)
        met = metrics(tri)
        g = met.centroid
        base = centroid_sum_squares(tri)
        value = leibniz_value(tri, x)
        scale = tri.perimeter + dist(x, g)
        assert abs(value - (base + 3.0 * dist(x, g) ** 2)) <= 1e-9 * scale * scale


def test_centroid_is_unique_minimizer():
    rng = random.Random(46)
    tri = random_triangle(rng)
    g = metrics(tri).centroid
    at_g = leibniz_value(tri, g)
    for _ in range(100):
        theta = rng.uniform(0.0, 2.0 * math.pi)
        r = rng.uniform(0.05, 2.0) * tri.perimeter
        x = Point(g.x + r * math.cos(theta), g.y + r * math.sin(theta))
        gain = leibniz_value(tri, x) - at_g
        assert gain > 0.0
        assert abs(gain - 3.0 * r * r) <= 1e-9 * r * r


def test_circumcenter_centroid_gap_examples():
    assert circumcenter_centroid_gap(RIGHT) == pytest.approx(25.0 / 36.0, rel=1e-12)
    # both routes independently: OG^2 from coordinates, R^2 - sum/9
    met = metrics(RIGHT)
    direct = dist(met.circumcenter, met.centroid) ** 2
    assert direct == pytest.approx(2.5**2 - 50.0 / 9.0, rel=1e-12)

    side = 2.0
    equi = Triangle(Point(0, 0), Point(side, 0), Point(side / 2.0, side * math.sqrt(3.0) / 2.0))
    assert circumcenter_centroid_gap(equi) <= 1e-12


def test_circumcenter_centroid_gap_random_sweep():
    rng = random.Random(47)
    for _ in range(300):
        tri = random_triangle(rng)
        met = metrics(tri)
        og2 = circumcenter_centroid_gap(tri)
        expected = met.circumradius**2 - (met.a**2 + met.b**2 + met.c**2) / 9.0
        assert abs(og2 - expected) <= 1e-9 * met.circumradius**2


def test_identities_scale_quadratically_under_dilation():
    tri = Triangle(Point(0, 0), Point(3, 1), Point(1, 2))
    factor = 2.5
    scaled = Triangle(
        Point(tri.va.x * factor, tri.va.y * factor),
        Point(tri.vb.x * factor, tri.vb.y * factor),
        Point(tri.vc.x * factor, tri.vc.y * factor),
    )
    assert sum_squared_medians(scaled) == pytest.approx(
        factor * factor * sum_squared_medians(tri), rel=1e-12
    )
    assert centroid_sum_squares(scaled) == pytest.approx(
        factor * factor * centroid_sum_squares(tri), rel=1e-12
    )


def test_vertex_selector_validation():
    with pytest.raises(ValueError):
        median_projection(RIGHT, "D")
