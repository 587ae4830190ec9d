"""Shared generators for the test suite: seeded random geometry and
rigid motions used by the property sweeps."""

from __future__ import annotations

import math
import random
from typing import Callable

from loci2d import Point, Triangle, dist

Motion = Callable[[Point], Point]


def random_point(rng: random.Random, lo: float = -10.0, hi: float = 10.0) -> Point:
    return Point(rng.uniform(lo, hi), rng.uniform(lo, hi))


def random_anchors(
    rng: random.Random, min_span: float = 0.5, max_span: float = 4.0
) -> tuple[Point, Point]:
    """Two anchor points with a controlled separation."""
    a = random_point(rng, -3.0, 3.0)
    span = rng.uniform(min_span, max_span)
    theta = rng.uniform(0.0, 2.0 * math.pi)
    b = Point(a.x + span * math.cos(theta), a.y + span * math.sin(theta))
    return a, b


def random_triangle(
    rng: random.Random,
    lo: float = -10.0,
    hi: float = 10.0,
    min_side: float = 1.0,
    min_area: float = 1.0,
) -> Triangle:
    """A well-shaped random triangle (bounded-away sides and area)."""
    while True:
        p, q, r = (random_point(rng, lo, hi) for _ in range(3))
        sides = (dist(p, q), dist(q, r), dist(r, p))
        twice_area = abs((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))
        if min(sides) >= min_side and twice_area >= 2.0 * min_area:
            return Triangle(p, q, r)


def rigid_motion(rng: random.Random) -> Motion:
    """A random rotation plus translation."""
    theta = rng.uniform(0.0, 2.0 * math.pi)
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    tx, ty = rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)

    def move(p: Point) -> Point:
        return Point(cos_t * p.x - sin_t * p.y + tx, sin_t * p.x + cos_t * p.y + ty)

    return move
