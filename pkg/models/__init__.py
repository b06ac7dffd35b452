"""Value types and pure geometry for points on a circle."""
from .circle import (
    Arc,
    CirclePointSet,
    DegeneracyClass,
    DegeneracyKind,
    NumericMode,
    OperationCounter,
    Ordering,
    TurnFraction,
    arc_between,
    cartesian_points,
    chord_compare,
    chord_key,
    classify_degeneracy,
    count_symmetric_quadruples,
    find_symmetric_quadruples,
    fit_circle,
    from_degrees,
    from_radians,
    from_turns,
    regular_polygon,
)
from .triangulation import (
    DualPath,
    NotAPath,
    ScoreKind,
    ScoreVector,
    Triangulation,
    angle_vector,
    compare_lex,
    crosses,
    dual_path,
    ears_of,
    fan_pair_triangulation,
    length_vector,
    maximal_ear_pairs,
    triangles_of,
    validate,
)

__all__ = [
    "Arc",
    "CirclePointSet",
    "DegeneracyClass",
    "DegeneracyKind",
    "DualPath",
    "NotAPath",
    "NumericMode",
    "OperationCounter",
    "Ordering",
    "ScoreKind",
    "ScoreVector",
    "Triangulation",
    "TurnFraction",
    "angle_vector",
    "arc_between",
    "cartesian_points",
    "chord_compare",
    "chord_key",
    "classify_degeneracy",
    "compare_lex",
    "count_symmetric_quadruples",
    "crosses",
    "dual_path",
    "ears_of",
    "fan_pair_triangulation",
    "find_symmetric_quadruples",
    "fit_circle",
    "from_degrees",
    "from_radians",
    "from_turns",
    "length_vector",
    "maximal_ear_pairs",
    "regular_polygon",
    "triangles_of",
    "validate",
]
