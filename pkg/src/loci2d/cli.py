"""Command line front end.

Subcommands::

    loci2d apollonius --a 0,0 --b 5,0 --ratio 3/2
    loci2d sumsq      --a 0,0 --b 4,0 --k2 20
    loci2d diffsq     --a 0,0 --b 4,0 --c 8
    loci2d harmonic   --a 0,0 --b 5,0 --ratio 3/2
    loci2d triangle   --a 0,0 --b 4,0 --c 0,3
    loci2d render     --scene figure.scene --out figure.svg
    loci2d verify     --scene figure.scene [--grid-step v] [--band v]

All numeric output is printed with nine significant digits.  Exit
codes: 0 success, 1 parse error (scene text or flags), 2 geometric
degeneracy, 3 verification failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import math
import sys

from .errors import GeometryError
from .geom import DEFAULT_TOL, Circle, Line, Point, dist, foot_of_perpendicular, line_through, midpoint
from .harmonic import Ratio, harmonic_conjugates
from .loci import (
    APOLLONIUS,
    SUM_SQUARES,
    Empty,
    LocusSpec,
    SinglePoint,
    apollonius_locus,
    diff_squares_locus,
    residual_field,
    sum_squares_locus,
)
from .oracle import GridSpec, verify_locus
from .scene import (
    LocusOutcome,
    ParseError,
    Scene,
    TriangleOutcome,
    TRIANGLE_SELECTORS,
    compute_scene,
    parse_scene,
)
from .svg import fit_window, render_svg
from .triangle import (
    AT_INFINITY,
    Triangle,
    bisector_feet,
    leibniz_value,
    median_projection,
    metrics,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DEGENERATE = 2
EXIT_VERIFY = 3
EXIT_IO = 4

DEFAULT_BAND = 0.02
GRID_DIVISIONS = 80


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: A003 - argparse hook
        raise _UsageError(message)


def _g(v: float) -> str:
    return format(float(v) + 0.0, ".9g")


def _point_flag(text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}")
    try:
        return Point(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ratio_flag(text: str) -> Ratio:
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            return Ratio(int(num), int(den))
        except (ValueError, GeometryError) as exc:
            raise argparse.ArgumentTypeError(f"bad ratio {text!r}: {exc}") from None
    try:
        return Ratio(float(text))
    except (ValueError, GeometryError) as exc:
        raise argparse.ArgumentTypeError(f"bad ratio {text!r}: {exc}") from None


def _print_locus(locus) -> None:
    if isinstance(locus, Circle):
        c = locus.center
        print(f"Circle center {_g(c.x)} {_g(c.y)} radius {_g(locus.radius)}")
    elif isinstance(locus, Line):
        a, (dx, dy) = locus.anchor, locus.direction
        print(f"Line anchor {_g(a.x)} {_g(a.y)} direction {_g(dx)} {_g(dy)}")
    elif isinstance(locus, SinglePoint):
        print(f"SinglePoint {_g(locus.point.x)} {_g(locus.point.y)}")
    else:
        print("Empty")


def _cmd_apollonius(ns: argparse.Namespace) -> int:
    result = apollonius_locus(ns.a, ns.b, ns.ratio)
    _print_locus(result.locus)
    if result.conjugates is not None:
        print(f"AO {_g(result.center_offset_ao)}")
        print(f"OB {_g(result.center_offset_ob)}")
        p, q = result.conjugates.internal, result.conjugates.external
        print(f"conjugate internal {_g(p.x)} {_g(p.y)}")
        print(f"conjugate external {_g(q.x)} {_g(q.y)}")
    return EXIT_OK


def _cmd_sumsq(ns: argparse.Namespace) -> int:
    _print_locus(sum_squares_locus(ns.a, ns.b, ns.k2))
    return EXIT_OK


def _cmd_diffsq(ns: argparse.Namespace) -> int:
    _print_locus(diff_squares_locus(ns.a, ns.b, ns.c))
    return EXIT_OK


def _cmd_harmonic(ns: argparse.Namespace) -> int:
    pair = harmonic_conjugates(ns.a, ns.b, ns.ratio)
    print(f"internal {_g(pair.internal.x)} {_g(pair.internal.y)}")
    print(f"external {_g(pair.external.x)} {_g(pair.external.y)}")
    return EXIT_OK


def _cmd_triangle(ns: argparse.Namespace) -> int:
    met = metrics(Triangle(ns.a, ns.b, ns.c))
    print(f"sides {_g(met.a)} {_g(met.b)} {_g(met.c)}")
    print(f"medians {_g(met.m_a)} {_g(met.m_b)} {_g(met.m_c)}")
    print(f"centroid {_g(met.centroid.x)} {_g(met.centroid.y)}")
    print(f"circumcenter {_g(met.circumcenter.x)} {_g(met.circumcenter.y)}")
    print(f"circumradius {_g(met.circumradius)}")
    return EXIT_OK


def _read_scene(path: str) -> Scene:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_scene(handle.read())


def _cmd_render(ns: argparse.Namespace) -> int:
    scene = _read_scene(ns.scene)
    outcomes = compute_scene(scene)
    data = render_svg(scene, outcomes)
    if ns.out is None:
        sys.stdout.buffer.write(data)
    else:
        with open(ns.out, "wb") as handle:
            handle.write(data)
    return EXIT_OK


def _band_units(kind: str, ab: float, band_knob: float) -> float:
    """Residual band in residual units: knob * AB for the ratio locus
    (length units), knob * AB^2 for the quadratic ones."""
    return band_knob * (ab if kind == APOLLONIUS else ab * ab)


def _corridor_width(outcome: LocusOutcome, a: Point, b: Point, band: float) -> float | None:
    """Full width of the |residual| <= band corridor around the locus."""
    d, locus = outcome.directive, outcome.locus
    ab = dist(a, b)
    if d.kind == APOLLONIUS:
        if isinstance(locus, Line):
            return band  # narrowest between the anchors, where the gradient peaks at 2
        lam = d.param.value if isinstance(d.param, Ratio) else float(d.param)
        return 2.0 * band / abs(lam - 1.0)
    if d.kind == SUM_SQUARES:
        if isinstance(locus, Empty):
            return None
        if isinstance(locus, SinglePoint):
            return 2.0 * math.sqrt(band / 2.0)
        r = locus.radius
        return 2.0 * (math.sqrt(r * r + band / 2.0) - r)
    return band / ab


def _distance_bound(
    outcome: LocusOutcome, a: Point, b: Point, band: float, window
) -> float:
    """Worst-case distance from an in-band point to the locus."""
    d, locus = outcome.directive, outcome.locus
    ab = dist(a, b)
    if d.kind == APOLLONIUS:
        if isinstance(locus, Line):
            farthest = max(
                max(dist(Point(x, y), a), dist(Point(x, y), b))
                for x in (window.xmin, window.xmax)
                for y in (window.ymin, window.ymax)
            )
            return band * farthest / ab
        lam = d.param.value if isinstance(d.param, Ratio) else float(d.param)
        return band / abs(lam - 1.0)
    if d.kind == SUM_SQUARES:
        if isinstance(locus, Empty):
            return 0.0
        if isinstance(locus, SinglePoint):
            return math.sqrt((band + DEFAULT_TOL.abs_eps * ab * ab) / 2.0)
        r = locus.radius
        inner = r - math.sqrt(max(r * r - band / 2.0, 0.0))
        outer = math.sqrt(r * r + band / 2.0) - r
        return max(inner, outer)
    return band / (2.0 * ab)


def _locus_check_lines(
    scene: Scene, outcome: LocusOutcome, grid: GridSpec, band_knob: float, window
) -> tuple[list[str], bool]:
    d = outcome.directive
    a, b = scene.points[d.a], scene.points[d.b]
    span = dist(a, b)
    scale = span if d.kind == APOLLONIUS else span * span
    band = _band_units(d.kind, span, band_knob)
    report = verify_locus(
        outcome.locus,
        residual_field(LocusSpec(d.kind, d.param), a, b),
        grid,
        DEFAULT_TOL,
        band=band,
        residual_threshold=DEFAULT_TOL.abs_eps * scale,
        distance_threshold=max(2.0 * grid.step, _distance_bound(outcome, a, b, band, window))
        * (1.0 + 1e-9),
    )
    param = f"{d.param.m}/{d.param.n}" if isinstance(d.param, Ratio) else _g(d.param)
    status = "ok" if report.passed else "FAIL"
    line = (
        f"{status} locus {d.kind} {d.a} {d.b} {param} "
        f"in_band={report.samples_in_band} "
        f"max_dist={_g(report.max_distance_to_locus)} "
        f"locus_samples={report.locus_sample_count} "
        f"max_residual={_g(report.max_predicate_residual_on_locus)}"
    )
    return [line], report.passed


def _triangle_identity_residuals(tri: Triangle, met, selectors: tuple[str, ...]) -> list[tuple[str, float, float]]:
    """(name, residual, threshold) triples for the selected identity checks."""
    wanted = selectors or TRIANGLE_SELECTORS
    per = met.perimeter
    sides2 = met.a**2 + met.b**2 + met.c**2
    medians2 = met.m_a**2 + met.m_b**2 + met.m_c**2
    eps = DEFAULT_TOL.rel_eps
    out: list[tuple[str, float, float]] = []

    if "median" in wanted:
        residual = max(
            abs(met.b**2 + met.c**2 - 2.0 * met.m_a**2 - met.a**2 / 2.0),
            abs(met.c**2 + met.a**2 - 2.0 * met.m_b**2 - met.b**2 / 2.0),
            abs(met.a**2 + met.b**2 - 2.0 * met.m_c**2 - met.c**2 / 2.0),
        )
        out.append(("median", residual, eps * per * per))
    if "projection" in wanted:
        residual = 0.0
        for vertex, (p, q) in (("A", (tri.vb, tri.vc)), ("B", (tri.vc, tri.va)), ("C", (tri.va, tri.vb))):
            v = {"A": tri.va, "B": tri.vb, "C": tri.vc}[vertex]
            side = line_through(p, q)
            h = foot_of_perpendicular(side, v)
            m = midpoint(p, q)
            geometric = (h.x - m.x) * side.direction[0] + (h.y - m.y) * side.direction[1]
            residual = max(residual, abs(median_projection(tri, vertex) - geometric))
        out.append(("projection", residual, eps * per))
    if "median_sum" in wanted:
        out.append(("median_sum", abs(medians2 - 0.75 * sides2), eps * per * per))
    if "centroid" in wanted:
        g = met.centroid
        at_g = dist(g, tri.va) ** 2 + dist(g, tri.vb) ** 2 + dist(g, tri.vc) ** 2
        out.append(("centroid", abs(at_g - sides2 / 3.0), eps * per * per))
    if "leibniz" in wanted:
        g = met.centroid
        at_g = dist(g, tri.va) ** 2 + dist(g, tri.vb) ** 2 + dist(g, tri.vc) ** 2
        residual = 0.0
        for probe in (tri.va, tri.vb, tri.vc):
            xg = dist(probe, g)
            residual = max(residual, abs(leibniz_value(tri, probe) - (at_g + 3.0 * xg * xg)))
        out.append(("leibniz", residual, eps * per * per))
    if "euler" in wanted:
        og2 = dist(met.circumcenter, met.centroid) ** 2
        expected = met.circumradius**2 - sides2 / 9.0
        out.append(("euler", abs(og2 - expected), eps * met.circumradius**2))
    if "bisector" in wanted:
        residual = 0.0
        largest_ratio = 0.0
        for vertex, (p, q) in (("A", (tri.vb, tri.vc)), ("B", (tri.vc, tri.va)), ("C", (tri.va, tri.vb))):
            v = {"A": tri.va, "B": tri.vb, "C": tri.vc}[vertex]
            ratio = dist(v, p) / dist(v, q)
            largest_ratio = max(largest_ratio, ratio)
            interior, exterior = bisector_feet(tri, vertex)
            residual = max(residual, abs(dist(interior, p) / dist(interior, q) - ratio))
            if exterior is not AT_INFINITY:
                residual = max(residual, abs(dist(exterior, p) / dist(exterior, q) - ratio))
        out.append(("bisector", residual, eps * (1.0 + largest_ratio)))
    return out


def _triangle_check_lines(outcome: TriangleOutcome) -> tuple[list[str], bool]:
    d = outcome.directive
    lines: list[str] = []
    all_ok = True
    for name, residual, threshold in _triangle_identity_residuals(
        outcome.triangle, outcome.metrics, d.selectors
    ):
        ok = residual <= threshold
        all_ok = all_ok and ok
        lines.append(
            f"{'ok' if ok else 'FAIL'} triangle {d.a} {d.b} {d.c} {name} "
            f"residual={_g(residual)} threshold={_g(threshold)}"
        )
    return lines, all_ok


def _default_step(scene: Scene, outcomes, window, band_knob: float) -> float:
    """Fine enough to land grid points inside every locus corridor,
    floored so the total sample count stays modest."""
    span = max(window.width, window.height)
    step = span / GRID_DIVISIONS
    for outcome in outcomes:
        if not isinstance(outcome, LocusOutcome):
            continue
        d = outcome.directive
        a, b = scene.points[d.a], scene.points[d.b]
        band = _band_units(d.kind, dist(a, b), band_knob)
        width = _corridor_width(outcome, a, b, band)
        if width is not None:
            step = min(step, 0.45 * width)
    return max(step, span / 1200.0)


def _cmd_verify(ns: argparse.Namespace) -> int:
    scene = _read_scene(ns.scene)
    outcomes = compute_scene(scene)
    window = scene.window if scene.window is not None else fit_window(scene, outcomes)
    step = ns.grid_step if ns.grid_step is not None else _default_step(scene, outcomes, window, ns.band)
    grid = GridSpec(Point(window.xmin, window.ymin), Point(window.xmax, window.ymax), step)

    lines: list[str] = []
    all_ok = True
    for outcome in outcomes:
        if isinstance(outcome, LocusOutcome):
            chunk, ok = _locus_check_lines(scene, outcome, grid, ns.band, window)
        else:
            chunk, ok = _triangle_check_lines(outcome)
        lines.extend(chunk)
        all_ok = all_ok and ok

    text = "\n".join(lines) + "\n" if lines else ""
    sys.stdout.write(text)
    if ns.out is not None:
        with open(ns.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    return EXIT_OK if all_ok else EXIT_VERIFY


def _build_parser() -> _Parser:
    parser = _Parser(prog="loci2d", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def two_anchor(p: _Parser) -> None:
        p.add_argument("--a", type=_point_flag, required=True, metavar="x,y")
        p.add_argument("--b", type=_point_flag, required=True, metavar="x,y")

    p = sub.add_parser("apollonius", help="distance-ratio locus")
    two_anchor(p)
    p.add_argument("--ratio", type=_ratio_flag, required=True, metavar="m/n|r")
    p.set_defaults(handler=_cmd_apollonius)

    p = sub.add_parser("sumsq", help="sum-of-squared-distances locus")
    two_anchor(p)
    p.add_argument("--k2", type=float, required=True, metavar="v")
    p.set_defaults(handler=_cmd_sumsq)

    p = sub.add_parser("diffsq", help="difference-of-squared-distances locus")
    two_anchor(p)
    p.add_argument("--c", type=float, required=True, metavar="v")
    p.set_defaults(handler=_cmd_diffsq)

    p = sub.add_parser("harmonic", help="internal/external division pair")
    two_anchor(p)
    p.add_argument("--ratio", type=_ratio_flag, required=True, metavar="m/n|r")
    p.set_defaults(handler=_cmd_harmonic)

    p = sub.add_parser("triangle", help="triangle metrics")
    p.add_argument("--a", type=_point_flag, required=True, metavar="x,y")
    p.add_argument("--b", type=_point_flag, required=True, metavar="x,y")
    p.add_argument("--c", type=_point_flag, required=True, metavar="x,y")
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("render", help="scene file to SVG")
    p.add_argument("--scene", required=True, metavar="path")
    p.add_argument("--out", default=None, metavar="path")
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("verify", help="scene file to verification report")
    p.add_argument("--scene", required=True, metavar="path")
    p.add_argument("--out", default=None, metavar="path")
    p.add_argument("--grid-step", type=float, default=None, metavar="v")
    p.add_argument("--band", type=float, default=DEFAULT_BAND, metavar="v")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"loci2d: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return ns.handler(ns)
    except ParseError as exc:
        print(f"loci2d: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GeometryError as exc:
        print(f"loci2d: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"loci2d: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
