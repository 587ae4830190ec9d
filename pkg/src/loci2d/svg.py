"""Deterministic SVG output for scenes.

The byte layout is pinned so repeated renders are identical: fixed
header, locus and triangle shapes in directive order, then point
markers and labels in declaration order, fixed attribute order, and
all coordinates formatted to six decimal places with no exponent
notation.  Lines are LF-terminated.  The mathematical y axis points up;
coordinates are flipped into the SVG pixel frame before formatting, so
no transform attribute appears in the output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WindowDegenerate
from .geom import Circle, Line, Point, clip_line_to_box
from .loci import Empty, SinglePoint
from .scene import LocusOutcome, Scene, SceneOutcome, TriangleOutcome, Window

CANVAS_WIDTH = 640.0
MARGIN_FRACTION = 0.10
MARKER_SIZE = 6.0
CROSS_HALF = 5.0
LABEL_OFFSET = 8.0
FONT_SIZE = 14
STROKE_WIDTH = 1.5


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def fit_window(scene: Scene, outcomes: list[SceneOutcome]) -> Window:
    """Axis-aligned window covering all scene geometry, padded by 10%.

    Lines contribute only their anchor point (they are unbounded);
    circles contribute their full bounding box.
    """
    xs: list[float] = []
    ys: list[float] = []

    def add(p: Point) -> None:
        xs.append(p.x)
        ys.append(p.y)

    for p in scene.points.values():
        add(p)
    for outcome in outcomes:
        if isinstance(outcome, TriangleOutcome):
            continue
        locus = outcome.locus
        if isinstance(locus, Circle):
            xs.extend((locus.center.x - locus.radius, locus.center.x + locus.radius))
            ys.extend((locus.center.y - locus.radius, locus.center.y + locus.radius))
        elif isinstance(locus, Line):
            add(locus.anchor)
        elif isinstance(locus, SinglePoint):
            add(locus.point)

    if not xs:
        raise WindowDegenerate("scene has no geometry to fit")
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    if span <= 0.0:
        raise WindowDegenerate("scene geometry has zero extent")
    pad = MARGIN_FRACTION * span
    return Window(min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)


@dataclass(frozen=True)
class _Frame:
    window: Window
    scale: float
    height: float

    def to_px(self, p: Point) -> tuple[float, float]:
        return (
            (p.x - self.window.xmin) * self.scale,
            (self.window.ymax - p.y) * self.scale,
        )


def _frame_for(window: Window) -> _Frame:
    scale = CANVAS_WIDTH / window.width
    return _Frame(window, scale, window.height * scale)


def _shape_element(outcome: SceneOutcome, scene: Scene, frame: _Frame) -> str | None:
    if isinstance(outcome, TriangleOutcome):
        d = outcome.directive
        corners = [frame.to_px(scene.points[name]) for name in (d.a, d.b, d.c)]
        path = " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in corners)
        return f'<path d="M {path} Z" fill="none" stroke="#000000" stroke-width="{STROKE_WIDTH}"/>'

    locus = outcome.locus
    if isinstance(locus, Circle):
        cx, cy = frame.to_px(locus.center)
        r = locus.radius * frame.scale
        return (
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" '
            f'fill="none" stroke="#000000" stroke-width="{STROKE_WIDTH}"/>'
        )
    if isinstance(locus, Line):
        w = frame.window
        clipped = clip_line_to_box(locus, w.xmin, w.ymin, w.xmax, w.ymax)
        if clipped is None:
            return None
        (x1, y1), (x2, y2) = frame.to_px(clipped[0]), frame.to_px(clipped[1])
        return (
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#000000" stroke-width="{STROKE_WIDTH}"/>'
        )
    if isinstance(locus, SinglePoint):
        x, y = frame.to_px(locus.point)
        d = (
            f"M {_fmt(x - CROSS_HALF)} {_fmt(y)} L {_fmt(x + CROSS_HALF)} {_fmt(y)} "
            f"M {_fmt(x)} {_fmt(y - CROSS_HALF)} L {_fmt(x)} {_fmt(y + CROSS_HALF)}"
        )
        return f'<path d="{d}" stroke="#000000" stroke-width="{STROKE_WIDTH}"/>'
    assert isinstance(locus, Empty)
    return None


def render_svg(scene: Scene, outcomes: list[SceneOutcome]) -> bytes:
    """Render a computed scene to a byte-stable SVG 1.1 document."""
    window = scene.window if scene.window is not None else fit_window(scene, outcomes)
    frame = _frame_for(window)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="640" height="{_fmt(frame.height)}" viewBox="0 0 640 {_fmt(frame.height)}">',
    ]
    for outcome in outcomes:
        element = _shape_element(outcome, scene, frame)
        if element is not None:
            lines.append(f"  {element}")
    half = MARKER_SIZE / 2.0
    for p in scene.points.values():
        x, y = frame.to_px(p)
        lines.append(
            f'  <rect x="{_fmt(x - half)}" y="{_fmt(y - half)}" '
            f'width="{_fmt(MARKER_SIZE)}" height="{_fmt(MARKER_SIZE)}" fill="#000000"/>'
        )
    for name, p in scene.points.items():
        x, y = frame.to_px(p)
        lines.append(
            f'  <text x="{_fmt(x + LABEL_OFFSET)}" y="{_fmt(y - LABEL_OFFSET)}" '
            f'font-family="sans-serif" font-size="{FONT_SIZE}" fill="#000000">{name}</text>'
        )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
