"""Two-point loci in the plane.

Construction and brute-force verification of the loci tied to a pair of
anchor points -- the distance-ratio circle with its harmonic conjugate
pair, the sum-of-squared-distances circle, and the
difference-of-squared-distances line -- plus the triangle identities
that underpin them (median lengths, centroid sums, circumcenter gap).
"""

from .errors import (
    DegenerateSegment,
    DegenerateTriangle,
    GeometryError,
    GridTooLarge,
    InvariantViolation,
    NegativeConstant,
    NonPositiveRatio,
    PoleAtB,
    UnitRatio,
    WindowDegenerate,
)
from .geom import (
    DEFAULT_TOL,
    Circle,
    Line,
    Point,
    Segment,
    ToleranceProfile,
    approx_eq,
    clip_line_to_box,
    dist,
    foot_of_perpendicular,
    line_point_distance,
    line_through,
    midpoint,
    perpendicular_direction,
)
from .harmonic import (
    ConjugatePair,
    Ratio,
    as_ratio,
    divide_external,
    divide_internal,
    harmonic_conjugates,
    ratio_at,
)
from .loci import (
    APOLLONIUS,
    DIFF_SQUARES,
    LOCUS_KINDS,
    SUM_SQUARES,
    ApolloniusResult,
    Empty,
    Locus,
    LocusSpec,
    SinglePoint,
    apollonius_locus,
    build_locus,
    diff_squares_locus,
    distance_to_locus,
    locus_contains,
    membership_residual,
    residual_field,
    sum_squares_locus,
)
from .oracle import GridSpec, VerificationReport, locus_samples, scan_predicate, verify_locus
from .scene import (
    LocusDirective,
    LocusOutcome,
    ParseError,
    Scene,
    TriangleDirective,
    TriangleOutcome,
    Window,
    compute_scene,
    parse_scene,
    serialize_scene,
)
from .svg import fit_window, render_svg
from .triangle import (
    AT_INFINITY,
    AtInfinity,
    Triangle,
    TriangleMetrics,
    bisector_feet,
    centroid_sum_squares,
    circumcenter_centroid_gap,
    leibniz_value,
    median_projection,
    metrics,
    sum_squared_medians,
)

__version__ = "0.1.0"

__all__ = [
    "APOLLONIUS",
    "AT_INFINITY",
    "ApolloniusResult",
    "AtInfinity",
    "Circle",
    "ConjugatePair",
    "DEFAULT_TOL",
    "DIFF_SQUARES",
    "DegenerateSegment",
    "DegenerateTriangle",
    "Empty",
    "GeometryError",
    "GridSpec",
    "GridTooLarge",
    "InvariantViolation",
    "LOCUS_KINDS",
    "Line",
    "Locus",
    "LocusDirective",
    "LocusOutcome",
    "LocusSpec",
    "NegativeConstant",
    "NonPositiveRatio",
    "ParseError",
    "Point",
    "PoleAtB",
    "Ratio",
    "SUM_SQUARES",
    "Scene",
    "Segment",
    "SinglePoint",
    "ToleranceProfile",
    "Triangle",
    "TriangleDirective",
    "TriangleMetrics",
    "TriangleOutcome",
    "UnitRatio",
    "VerificationReport",
    "Window",
    "WindowDegenerate",
    "apollonius_locus",
    "approx_eq",
    "as_ratio",
    "bisector_feet",
    "build_locus",
    "centroid_sum_squares",
    "circumcenter_centroid_gap",
    "clip_line_to_box",
    "compute_scene",
    "diff_squares_locus",
    "dist",
    "distance_to_locus",
    "divide_external",
    "divide_internal",
    "fit_window",
    "foot_of_perpendicular",
    "harmonic_conjugates",
    "leibniz_value",
    "line_point_distance",
    "line_through",
    "locus_contains",
    "locus_samples",
    "median_projection",
    "membership_residual",
    "metrics",
    "midpoint",
    "parse_scene",
    "perpendicular_direction",
    "ratio_at",
    "render_svg",
    "residual_field",
    "scan_predicate",
    "serialize_scene",
    "sum_squared_medians",
    "sum_squares_locus",
    "verify_locus",
]
