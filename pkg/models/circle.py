"""
Concyclic point sets.
Exact (rational turn fractions) and Float (radians) positions on a circle,
chord-length comparison through arcs, and degeneracy classification.
"""
import logging
import math
from collections import defaultdict
from enum import Enum, IntEnum
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from .errors import (
    CollinearInput,
    DuplicatePoint,
    EqualIndices,
    IndexOutOfRange,
    NotConcyclic,
    TooSmall,
)

logger = logging.getLogger(__name__)

TAU = 2 * math.pi
DEFAULT_REL_TOL = 1e-9

Scalar = Union[Fraction, float]
Point2D = Tuple[float, float]


class NumericMode(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class DegeneracyKind(str, Enum):
    DISTINCT_DIAGONALS = "DistinctDiagonals"
    NO_SYMMETRIC_QUADRUPLE = "NoSymmetricQuadruple"
    DEGENERATE = "Degenerate"


class OperationCounter:
    """Counts chord comparisons and arc constructions for the bench harness."""

    def __init__(self):
        self.comparisons = 0
        self.arcs = 0

    @property
    def total(self) -> int:
        return self.comparisons + self.arcs

    def reset(self) -> None:
        self.comparisons = 0
        self.arcs = 0

    def __repr__(self) -> str:
        return f"OperationCounter(comparisons={self.comparisons}, arcs={self.arcs})"


def full_turn(mode: NumericMode) -> Scalar:
    return Fraction(1) if mode == NumericMode.EXACT else TAU


def half_turn(mode: NumericMode) -> Scalar:
    return Fraction(1, 2) if mode == NumericMode.EXACT else math.pi


def _full_of(value: Scalar) -> Scalar:
    return Fraction(1) if isinstance(value, Fraction) else TAU


def _to_radians(value: Scalar) -> float:
    return float(value) * TAU if isinstance(value, Fraction) else float(value)


class TurnFraction(BaseModel):
    """A position on the circle: exact turns in [0, 1) or radians in [0, 2*pi)."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Any
    mode: NumericMode

    @model_validator(mode="after")
    def check_range(self) -> "TurnFraction":
        if self.mode == NumericMode.EXACT:
            if not isinstance(self.value, Fraction):
                raise ValueError("Exact turn fractions must be Fraction values")
            if not (0 <= self.value < 1):
                raise ValueError(f"Turn fraction {self.value} outside [0, 1)")
        else:
            if isinstance(self.value, Fraction) or not math.isfinite(self.value):
                raise ValueError(f"Float positions must be finite floats, got {self.value!r}")
            if not (0 <= self.value < TAU):
                raise ValueError(f"Angle {self.value} outside [0, 2*pi)")
        return self

    @property
    def radians(self) -> float:
        return _to_radians(self.value)


class Arc(NamedTuple):
    """Directed CCW span from point `start` to point `end`."""
    span: Scalar
    start: int
    end: int


class CirclePointSet(BaseModel):
    """n >= 4 points on a circle, sorted counter-clockwise from the smallest position."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    mode: NumericMode
    thetas: Tuple[Any, ...]
    labels: Tuple[int, ...]
    center: Point2D = (0.0, 0.0)
    radius: float = Field(1.0, gt=0, description="Circle radius in input units")
    # Input coordinates in theta order; None when the input was angular.
    points: Optional[Tuple[Point2D, ...]] = None
    rel_tol: float = Field(DEFAULT_REL_TOL, gt=0)

    @model_validator(mode="after")
    def check_positions(self) -> "CirclePointSet":
        n = len(self.thetas)
        if n < 4:
            raise ValueError(f"At least 4 points are required, got {n}")
        if len(self.labels) != n:
            raise ValueError("One label per point is required")
        if self.points is not None and len(self.points) != n:
            raise ValueError("One coordinate pair per point is required")
        previous = None
        for t in self.thetas:
            try:
                TurnFraction(value=t, mode=self.mode)
            except ValidationError as exc:
                raise ValueError(exc.errors()[0]["msg"]) from None
            if previous is not None and t <= previous:
                raise ValueError("Positions must be strictly increasing")
            previous = t
        return self

    @property
    def n(self) -> int:
        return len(self.thetas)

    @property
    def full(self) -> Scalar:
        return full_turn(self.mode)

    @property
    def half(self) -> Scalar:
        return half_turn(self.mode)

    @property
    def tolerance(self) -> float:
        """Absolute key tolerance: zero in Exact mode."""
        return 0 if self.mode == NumericMode.EXACT else self.rel_tol * TAU

    def key(self, i: int, j: int) -> Scalar:
        """Chord key of the segment [p_i p_j] (minor arc); no index checks."""
        span = (self.thetas[j] - self.thetas[i]) % self.full
        other = self.full - span
        return span if span <= other else other


# ────────────────────────────────────────────────────────────────────────────────
# Construction
# ────────────────────────────────────────────────────────────────────────────────
def _build(
    values: Sequence[Scalar],
    mode: NumericMode,
    labels: Optional[Sequence[int]] = None,
    points: Optional[Sequence[Point2D]] = None,
    center: Point2D = (0.0, 0.0),
    radius: float = 1.0,
    rel_tol: float = DEFAULT_REL_TOL,
) -> CirclePointSet:
    if len(values) < 4:
        raise TooSmall(f"At least 4 points are required, got {len(values)}")
    labels = list(range(len(values))) if labels is None else list(labels)
    if len(labels) != len(values):
        raise ValueError("labels must have one entry per point")

    full = full_turn(mode)
    normalized = []
    for v in values:
        t = v % full
        if t >= full:  # float rounding of tiny negatives
            t = 0.0
        normalized.append(t)

    order = sorted(range(len(values)), key=lambda k: normalized[k])
    thetas = [normalized[k] for k in order]
    tol = 0 if mode == NumericMode.EXACT else rel_tol * TAU
    for a, b in zip(thetas, thetas[1:]):
        if b - a <= tol:
            raise DuplicatePoint(f"Two points share the position {a}")
    if full - thetas[-1] + thetas[0] <= tol:
        raise DuplicatePoint(f"Two points share the position {thetas[0]}")

    return CirclePointSet(
        mode=mode,
        thetas=tuple(thetas),
        labels=tuple(labels[k] for k in order),
        points=None if points is None else tuple(tuple(points[k]) for k in order),
        center=center,
        radius=radius,
        rel_tol=rel_tol,
    )


def parse_turn(value: Union[str, int, Fraction]) -> Fraction:
    """Parse "num/den" (or an integer) into an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str) and "/" in value:
        num, den = value.split("/", 1)
        den_i = int(den)
        if den_i <= 0:
            raise ValueError(f"Turn fraction {value!r} needs a positive denominator")
        return Fraction(int(num), den_i)
    return Fraction(value)


def from_turns(turns: Sequence[Union[str, int, Fraction]], labels: Optional[Sequence[int]] = None) -> CirclePointSet:
    return _build([parse_turn(t) for t in turns], NumericMode.EXACT, labels)


def from_degrees(
    degrees: Sequence[Union[int, float, str]],
    mode: NumericMode = NumericMode.EXACT,
    labels: Optional[Sequence[int]] = None,
    rel_tol: float = DEFAULT_REL_TOL,
) -> CirclePointSet:
    if mode == NumericMode.EXACT:
        # Through the decimal string, so 47.5 stays 95/720 instead of a binary float.
        values = [Fraction(str(d)) / 360 for d in degrees]
    else:
        values = [math.radians(float(d)) for d in degrees]
    return _build(values, mode, labels, rel_tol=rel_tol)


def from_radians(radians: Sequence[float], labels: Optional[Sequence[int]] = None,
                 rel_tol: float = DEFAULT_REL_TOL) -> CirclePointSet:
    return _build([float(r) for r in radians], NumericMode.FLOAT, labels, rel_tol=rel_tol)


def regular_polygon(n: int, mode: NumericMode = NumericMode.EXACT) -> CirclePointSet:
    if mode == NumericMode.EXACT:
        return _build([Fraction(i, n) for i in range(n)], mode)
    return _build([TAU * i / n for i in range(n)], mode)


def _cross(o: Point2D, a: Point2D, b: Point2D) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def fit_circle(points: Sequence[Sequence[float]], rel_tol: Optional[float] = None) -> CirclePointSet:
    """
    Fit the circle through the first three non-collinear points and check the rest against it.

    Args:
        points: Cartesian coordinates, at least 4
        rel_tol: allowed deviation from the circle, relative to the radius

    Returns:
        A Float-mode CirclePointSet keeping the input coordinates and input order as labels
    """
    tol = DEFAULT_REL_TOL if rel_tol is None else rel_tol
    pts = [(float(p[0]), float(p[1])) for p in points]
    if len(pts) < 4:
        raise TooSmall(f"At least 4 points are required, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise DuplicatePoint("The input contains the same point twice")

    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    scale = max(max(xs) - min(xs), max(ys) - min(ys))

    a, b = pts[0], pts[1]
    c = next((p for p in pts[2:] if abs(_cross(a, b, p)) > tol * scale * scale), None)
    if c is None:
        raise CollinearInput("All points lie on a line; no circle passes through them")

    d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    a2 = a[0] ** 2 + a[1] ** 2
    b2 = b[0] ** 2 + b[1] ** 2
    c2 = c[0] ** 2 + c[1] ** 2
    cx = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d
    cy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d
    radius = math.hypot(a[0] - cx, a[1] - cy)

    for k, p in enumerate(pts):
        deviation = abs(math.hypot(p[0] - cx, p[1] - cy) - radius)
        if deviation > tol * radius:
            raise NotConcyclic(
                f"Point {k} {p} is {deviation:.3g} away from the circle "
                f"centered ({cx:.6g}, {cy:.6g}) with radius {radius:.6g}"
            )

    thetas = [math.atan2(p[1] - cy, p[0] - cx) for p in pts]
    logger.debug("Fitted circle center=(%g, %g) radius=%g", cx, cy, radius)
    return _build(thetas, NumericMode.FLOAT, list(range(len(pts))), points=pts,
                  center=(cx, cy), radius=radius, rel_tol=tol)


def cartesian_points(P: CirclePointSet) -> List[Point2D]:
    """Input coordinates, or coordinates synthesized from center, radius and angle."""
    if P.points is not None:
        return list(P.points)
    cx, cy = P.center
    out = []
    for t in P.thetas:
        rad = _to_radians(t)
        out.append((cx + P.radius * math.cos(rad), cy + P.radius * math.sin(rad)))
    return out


# ────────────────────────────────────────────────────────────────────────────────
# Arcs and chord comparison
# ────────────────────────────────────────────────────────────────────────────────
def arc_between(P: CirclePointSet, i: int, j: int, counter: Optional[OperationCounter] = None) -> Arc:
    n = P.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"Indices ({i}, {j}) outside 0..{n - 1}")
    if i == j:
        raise EqualIndices(f"An arc needs two distinct points, got ({i}, {j})")
    if counter is not None:
        counter.arcs += 1
    return Arc((P.thetas[j] - P.thetas[i]) % P.full, i, j)


def chord_key(arc: Arc) -> Scalar:
    """Minor arc of the chord: longer chord <=> larger key."""
    other = _full_of(arc.span) - arc.span
    return arc.span if arc.span <= other else other


def compare_keys(a: Scalar, b: Scalar, tol: float = 0) -> Ordering:
    if tol:
        diff = a - b
        if diff > tol:
            return Ordering.GREATER
        if diff < -tol:
            return Ordering.LESS
        return Ordering.EQUAL
    if a > b:
        return Ordering.GREATER
    if a < b:
        return Ordering.LESS
    return Ordering.EQUAL


def chord_compare(a: Arc, b: Arc, rel_tol: Optional[float] = None,
                  counter: Optional[OperationCounter] = None) -> Ordering:
    """Order two arcs of the same circle by chord length 2R*sin(span/2)."""
    if counter is not None:
        counter.comparisons += 1
    if isinstance(a.span, Fraction) and isinstance(b.span, Fraction):
        tol = 0
    else:
        tol = (DEFAULT_REL_TOL if rel_tol is None else rel_tol) * TAU
        a = Arc(_to_radians(a.span), a.start, a.end)
        b = Arc(_to_radians(b.span), b.start, b.end)
    return compare_keys(chord_key(a), chord_key(b), tol)


def chord_length(arc: Arc, radius: float = 1.0) -> float:
    """Reporting only; orderings never go through this float."""
    return 2 * radius * math.sin(_to_radians(arc.span) / 2)


def key_length(key: Scalar, radius: float = 1.0) -> float:
    return 2 * radius * math.sin(_to_radians(key) / 2)


# ────────────────────────────────────────────────────────────────────────────────
# Degeneracy
# ────────────────────────────────────────────────────────────────────────────────
Diagonal = Tuple[int, int]
Quadruple = Tuple[int, int, int, int]


class DegeneracyClass(BaseModel):
    kind: DegeneracyKind
    # Symmetric quadruples (Degenerate only), smallest label first.
    witnesses: List[Quadruple] = []
    # Every pair of distinct diagonals with equal length.
    equal_pairs: List[Tuple[Diagonal, Diagonal]] = []

    @field_validator("witnesses")
    @classmethod
    def sort_witnesses(cls, v):
        return sorted(v)


def _diagonals(n: int) -> List[Diagonal]:
    return [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]


def _equal_groups(P: CirclePointSet) -> List[List[Diagonal]]:
    """Diagonals grouped by chord length (groups of size >= 2 only)."""
    keyed = [(P.key(i, j), (i, j)) for i, j in _diagonals(P.n)]
    if P.mode == NumericMode.EXACT:
        buckets: Dict[Fraction, List[Diagonal]] = defaultdict(list)
        for k, d in keyed:
            buckets[k].append(d)
        groups = list(buckets.values())
    else:
        keyed.sort()
        tol = P.tolerance
        # Every member lies within tol of the group's first key.
        groups, current, first = [], [], None
        for k, d in keyed:
            if first is not None and k - first > tol:
                groups.append(current)
                current = []
                first = None
            if first is None:
                first = k
            current.append(d)
        groups.append(current)
    return [sorted(g) for g in groups if len(g) > 1]


def crossing(d1: Diagonal, d2: Diagonal) -> bool:
    """Cyclic strict betweenness: exactly one endpoint of d2 lies strictly inside d1's index range."""
    a, b = sorted(d1)
    c, d = d2
    if c in (a, b) or d in (a, b):
        return False
    return (a < c < b) != (a < d < b)


def find_symmetric_quadruples(P: CirclePointSet) -> List[Quadruple]:
    found = set()
    for group in _equal_groups(P):
        for d1, d2 in combinations(group, 2):
            if crossing(d1, d2):
                found.add(tuple(sorted(d1 + d2)))
    return sorted(found)


def count_symmetric_quadruples(P: CirclePointSet) -> int:
    return len(find_symmetric_quadruples(P))


def classify_degeneracy(P: CirclePointSet) -> DegeneracyClass:
    groups = _equal_groups(P)
    if not groups:
        return DegeneracyClass(kind=DegeneracyKind.DISTINCT_DIAGONALS)

    equal_pairs = [pair for g in groups for pair in combinations(g, 2)]
    quadruples = sorted({tuple(sorted(d1 + d2)) for d1, d2 in equal_pairs if crossing(d1, d2)})
    if quadruples:
        logger.info("Input has %d symmetric quadruples", len(quadruples))
        return DegeneracyClass(kind=DegeneracyKind.DEGENERATE, witnesses=quadruples, equal_pairs=equal_pairs)
    return DegeneracyClass(kind=DegeneracyKind.NO_SYMMETRIC_QUADRUPLE, equal_pairs=equal_pairs)
