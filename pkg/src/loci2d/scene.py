"""Scene files: a line-oriented description of points, loci and triangles.

Grammar, one statement per line; ``#`` starts a comment and blank lines
are ignored::

    point <name> <x> <y>
    locus apollonius <A> <B> <m>/<n>
    locus sumsq <A> <B> <k2>
    locus diffsq <A> <B> <c>
    triangle <A> <B> <C> [selector ...]
    window <xmin> <ymin> <xmax> <ymax>

Names start with a letter and may contain letters, digits and
underscores; every name a directive references must be declared by an
earlier ``point`` line, and names are unique.  Numbers are plain
decimals (scientific notation allowed); ratios are pairs of positive
integers.  Triangle selectors choose which identity checks ``verify``
runs -- median, projection, median_sum, centroid, leibniz, euler,
bisector -- and listing none selects all of them.  A scene holds at
most 64 locus/triangle directives.  The first offending token wins and
is reported with its 1-based line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .geom import DEFAULT_TOL, Point, ToleranceProfile
from .harmonic import Ratio
from .loci import (
    APOLLONIUS,
    LOCUS_KINDS,
    SUM_SQUARES,
    ApolloniusResult,
    Locus,
    apollonius_locus,
    diff_squares_locus,
    sum_squares_locus,
)
from .triangle import Triangle, TriangleMetrics, metrics

TRIANGLE_SELECTORS = (
    "median",
    "projection",
    "median_sum",
    "centroid",
    "leibniz",
    "euler",
    "bisector",
)
MAX_DIRECTIVES = 64

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_NUMBER_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?\Z")
_RATIO_RE = re.compile(r"(\d+)/(\d+)\Z")


class ParseError(Exception):
    """Scene text rejected; carries the 1-based source position."""

    def __init__(self, line: int, column: int, message: str) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass(frozen=True)
class LocusDirective:
    kind: str
    a: str
    b: str
    param: Ratio | float


@dataclass(frozen=True)
class TriangleDirective:
    a: str
    b: str
    c: str
    selectors: tuple[str, ...] = ()


Directive = LocusDirective | TriangleDirective


@dataclass(frozen=True)
class Window:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin


@dataclass(frozen=True)
class Scene:
    points: dict[str, Point]
    directives: tuple[Directive, ...]
    window: Window | None = None


def _tokens(line: str) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    for m in re.finditer(r"\S+", line):
        if m.group().startswith("#"):
            break
        out.append((m.group(), m.start() + 1))
    return out


def parse_scene(source: str) -> Scene:
    """Parse scene text into a Scene; raises ParseError on the first fault."""
    points: dict[str, Point] = {}
    directives: list[Directive] = []
    window: Window | None = None

    for lineno, raw in enumerate(source.split("\n"), 1):
        toks = _tokens(raw.rstrip("\r"))
        if not toks:
            continue

        def fail(column: int, message: str) -> ParseError:
            return ParseError(lineno, column, message)

        def number(tok: str, col: int) -> float:
            if not _NUMBER_RE.match(tok):
                raise fail(col, f"malformed number {tok!r}")
            return float(tok)

        def declared(tok: str, col: int) -> str:
            if not _NAME_RE.match(tok):
                raise fail(col, f"invalid name {tok!r}")
            if tok not in points:
                raise fail(col, f"undeclared name {tok}")
            return tok

        def arity(n: int, usage: str) -> None:
            if len(toks) - 1 != n:
                raise fail(toks[0][1], f"expected '{usage}'")

        def push(directive: Directive, col: int) -> None:
            if len(directives) >= MAX_DIRECTIVES:
                raise fail(col, f"too many directives (max {MAX_DIRECTIVES})")
            directives.append(directive)

        keyword, kw_col = toks[0]

        if keyword == "point":
            arity(3, "point <name> <x> <y>")
            (name, name_col), (xs, xs_col), (ys, ys_col) = toks[1:]
            if not _NAME_RE.match(name):
                raise fail(name_col, f"invalid name {name!r}")
            if name in points:
                raise fail(name_col, f"duplicate name {name}")
            points[name] = Point(number(xs, xs_col), number(ys, ys_col))

        elif keyword == "locus":
            arity(4, "locus <kind> <A> <B> <param>")
            (kind, kind_col), (an, an_col), (bn, bn_col), (ps, ps_col) = toks[1:]
            if kind not in LOCUS_KINDS:
                raise fail(kind_col, f"unknown locus kind {kind!r}")
            a = declared(an, an_col)
            b = declared(bn, bn_col)
            param: Ratio | float
            if kind == APOLLONIUS:
                m = _RATIO_RE.match(ps)
                if not m or int(m.group(1)) == 0 or int(m.group(2)) == 0:
                    raise fail(ps_col, f"malformed ratio {ps!r} (want <m>/<n>, positive integers)")
                param = Ratio(int(m.group(1)), int(m.group(2)))
            else:
                param = number(ps, ps_col)
            push(LocusDirective(kind, a, b, param), kw_col)

        elif keyword == "triangle":
            if len(toks) - 1 < 3:
                raise fail(kw_col, "expected 'triangle <A> <B> <C> [selector ...]'")
            names = [declared(tok, col) for tok, col in toks[1:4]]
            if len(set(names)) != 3:
                raise fail(toks[1][1], "triangle vertices must be three distinct names")
            selectors: list[str] = []
            for tok, col in toks[4:]:
                if tok not in TRIANGLE_SELECTORS:
                    raise fail(col, f"unknown identity selector {tok!r}")
                selectors.append(tok)
            push(TriangleDirective(*names, tuple(selectors)), kw_col)

        elif keyword == "window":
            arity(4, "window <xmin> <ymin> <xmax> <ymax>")
            if window is not None:
                raise fail(kw_col, "duplicate window")
            vals = [number(tok, col) for tok, col in toks[1:]]
            if not (vals[2] > vals[0] and vals[3] > vals[1]):
                raise fail(kw_col, "degenerate window (need xmin < xmax and ymin < ymax)")
            window = Window(*vals)

        else:
            raise fail(kw_col, f"unknown keyword {keyword!r}")

    return Scene(points, tuple(directives), window)


def _num(v: float) -> str:
    return repr(float(v))


def serialize_scene(scene: Scene) -> str:
    """Canonical text for a scene; parsing it reproduces the scene."""
    lines: list[str] = []
    for name, p in scene.points.items():
        lines.append(f"point {name} {_num(p.x)} {_num(p.y)}")
    if scene.window is not None:
        w = scene.window
        lines.append(f"window {_num(w.xmin)} {_num(w.ymin)} {_num(w.xmax)} {_num(w.ymax)}")
    for d in scene.directives:
        if isinstance(d, LocusDirective):
            if isinstance(d.param, Ratio):
                if not (isinstance(d.param.m, int) and isinstance(d.param.n, int)):
                    raise ValueError("scene ratios must be integer pairs")
                lines.append(f"locus {d.kind} {d.a} {d.b} {d.param.m}/{d.param.n}")
            else:
                lines.append(f"locus {d.kind} {d.a} {d.b} {_num(d.param)}")
        else:
            tail = "".join(f" {s}" for s in d.selectors)
            lines.append(f"triangle {d.a} {d.b} {d.c}{tail}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LocusOutcome:
    directive: LocusDirective
    locus: Locus
    details: ApolloniusResult | None


@dataclass(frozen=True)
class TriangleOutcome:
    directive: TriangleDirective
    triangle: Triangle
    metrics: TriangleMetrics


SceneOutcome = LocusOutcome | TriangleOutcome


def compute_scene(scene: Scene, tol: ToleranceProfile = DEFAULT_TOL) -> list[SceneOutcome]:
    """Evaluate every directive of a scene, in order."""
    outcomes: list[SceneOutcome] = []
    for d in scene.directives:
        if isinstance(d, LocusDirective):
            a, b = scene.points[d.a], scene.points[d.b]
            if d.kind == APOLLONIUS:
                result = apollonius_locus(a, b, d.param, tol)
                outcomes.append(LocusOutcome(d, result.locus, result))
            elif d.kind == SUM_SQUARES:
                outcomes.append(LocusOutcome(d, sum_squares_locus(a, b, float(d.param), tol), None))
            else:
                outcomes.append(LocusOutcome(d, diff_squares_locus(a, b, float(d.param), tol), None))
        else:
            tri = Triangle(scene.points[d.a], scene.points[d.b], scene.points[d.c])
            outcomes.append(TriangleOutcome(d, tri, metrics(tri, tol)))
    return outcomes
