"""
Triangulations of the inscribed convex polygon.
Validity, ears, dual path, angle/length score vectors and the two-ear fan construction.
All tests are combinatorial on point indices; geometry only enters through arc keys.
"""
from enum import Enum
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .circle import CirclePointSet, Diagonal, Ordering, compare_keys, crossing
from .errors import CrossingEars, IndexOutOfRange, KindMismatch, LengthMismatch, SameApex

Triangle = Tuple[int, int, int]

crosses = crossing


class Triangulation(BaseModel):
    """A set of diagonals over n points, stored as sorted (i < j) pairs in sorted order."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3)
    diagonals: Tuple[Diagonal, ...]

    @field_validator("diagonals", mode="before")
    @classmethod
    def normalize(cls, v):
        return tuple(sorted({(min(a, b), max(a, b)) for a, b in v}))

    def relabel(self, labels: Sequence[int]) -> List[Diagonal]:
        """Diagonals as label pairs, each pair and the list sorted."""
        return sorted(tuple(sorted((labels[a], labels[b]))) for a, b in self.diagonals)


class ScoreKind(str, Enum):
    ANGLE = "AngleVector"
    LENGTH = "LengthVector"


class ScoreVector(BaseModel):
    """Ascending list of comparison keys (minor arcs for lengths, half-arcs for angles)."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: ScoreKind
    entries: Tuple[Any, ...]
    tolerance: float = 0

    @model_validator(mode="after")
    def check_sorted(self) -> "ScoreVector":
        if any(b < a for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError("Score vector entries must be nondecreasing")
        return self


class DualPath(BaseModel):
    triangles: List[Triangle]


class NotAPath(BaseModel):
    branching: Triangle
    degree: int


def is_chord(d: Diagonal, n: int) -> bool:
    a, b = sorted(d)
    return b - a == 1 or (a == 0 and b == n - 1)


def _laminar(diagonals: Sequence[Diagonal]) -> bool:
    """Index intervals are nested or disjoint (touching allowed) <=> no two diagonals cross."""
    stack: List[int] = []
    for a, b in sorted(diagonals, key=lambda d: (d[0], -d[1])):
        while stack and stack[-1] <= a:
            stack.pop()
        if stack and b > stack[-1]:
            return False
        stack.append(b)
    return True


def triangles_of(T: Triangulation) -> List[Triangle]:
    """Faces of a (valid) triangulation: consecutive neighbours around each vertex."""
    n = T.n
    neighbours: Dict[int, set] = {v: {(v - 1) % n, (v + 1) % n} for v in range(n)}
    for a, b in T.diagonals:
        neighbours[a].add(b)
        neighbours[b].add(a)
    found = set()
    for v in range(n):
        around = sorted(neighbours[v], key=lambda u: (u - v) % n)
        for u, w in zip(around, around[1:]):
            found.add(tuple(sorted((v, u, w))))
    return sorted(found)


def validate(T: Triangulation, n: Optional[int] = None) -> bool:
    n = T.n if n is None else n
    if n < 3 or T.n != n or len(T.diagonals) != n - 3:
        return False
    for a, b in T.diagonals:
        if not (0 <= a < b < n) or is_chord((a, b), n):
            return False
    if not _laminar(T.diagonals):
        return False
    return len(triangles_of(T)) == n - 2


def ears_of(T: Triangulation) -> List[Diagonal]:
    n = T.n
    return [(a, b) for a, b in T.diagonals if b - a == 2 or a + n - b == 2]


def dual_path(T: Triangulation) -> Union[DualPath, NotAPath]:
    triangles = triangles_of(T)
    by_diagonal: Dict[Diagonal, List[int]] = {d: [] for d in T.diagonals}
    for t, (a, b, c) in enumerate(triangles):
        for edge in ((a, b), (b, c), (a, c)):
            if edge in by_diagonal:
                by_diagonal[edge].append(t)

    adjacency: List[List[int]] = [[] for _ in triangles]
    for t1, t2 in by_diagonal.values():
        adjacency[t1].append(t2)
        adjacency[t2].append(t1)

    for t, nbrs in enumerate(adjacency):
        if len(nbrs) > 2:
            return NotAPath(branching=triangles[t], degree=len(nbrs))

    # Triangles are sorted, so the first leaf is the smallest one.
    start = next(t for t, nbrs in enumerate(adjacency) if len(nbrs) <= 1)
    order, previous, current = [start], None, start
    while True:
        nxt = [t for t in adjacency[current] if t != previous]
        if not nxt:
            break
        previous, current = current, nxt[0]
        order.append(current)
    return DualPath(triangles=[triangles[t] for t in order])


def length_keys(diagonals: Sequence[Diagonal], P: CirclePointSet) -> List[Any]:
    return sorted(P.key(a, b) for a, b in diagonals)


def length_vector(T: Triangulation, P: CirclePointSet) -> ScoreVector:
    return ScoreVector(kind=ScoreKind.LENGTH, entries=tuple(length_keys(T.diagonals, P)), tolerance=P.tolerance)


def angle_keys(triangles: Sequence[Triangle], P: CirclePointSet) -> List[Any]:
    """Inscribed angles: the angle opposite a side is half the arc that avoids the vertex."""
    th, full = P.thetas, P.full
    angles = []
    for a, b, c in triangles:
        angles.append((th[b] - th[a]) / 2)
        angles.append((th[c] - th[b]) / 2)
        angles.append((full - (th[c] - th[a])) / 2)
    angles.sort()
    return angles


def angle_vector(T: Triangulation, P: CirclePointSet) -> ScoreVector:
    return ScoreVector(kind=ScoreKind.ANGLE, entries=tuple(angle_keys(triangles_of(T), P)), tolerance=P.tolerance)


def compare_sequences(a: Sequence[Any], b: Sequence[Any], tol: float = 0) -> Ordering:
    for x, y in zip(a, b):
        order = compare_keys(x, y, tol)
        if order != Ordering.EQUAL:
            return order
    return Ordering.EQUAL


def compare_lex(a: ScoreVector, b: ScoreVector) -> Ordering:
    if a.kind != b.kind:
        raise KindMismatch(f"Cannot compare {a.kind.value} with {b.kind.value}")
    if len(a.entries) != len(b.entries):
        raise LengthMismatch(f"Score vectors have {len(a.entries)} and {len(b.entries)} entries")
    return compare_sequences(a.entries, b.entries, max(a.tolerance, b.tolerance))


def _ear(n: int, apex: int) -> Diagonal:
    a, b = (apex - 1) % n, (apex + 1) % n
    return (min(a, b), max(a, b))


def fan_pair_triangulation(P: Union[CirclePointSet, int], i: int, j: int) -> Triangulation:
    """
    Triangulation whose ears include e_i and e_j: a fan from p_{i-1} up to p_{j-1}
    and a fan from p_{j-1} back to p_{i-1}.
    """
    n = P if isinstance(P, int) else P.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"Ear apexes ({i}, {j}) outside 0..{n - 1}")
    if i == j:
        raise SameApex(f"Both ears have apex {i}")
    if crossing(_ear(n, i), _ear(n, j)):
        raise CrossingEars(f"Ears e_{i} and e_{j} cross")

    a, b = (i - 1) % n, (j - 1) % n
    diagonals = set()
    k = (i + 1) % n
    while True:
        diagonals.add((a, k))
        if k == b:
            break
        k = (k + 1) % n
    k = (j + 1) % n
    while k != a:
        diagonals.add((b, k))
        k = (k + 1) % n

    T = Triangulation(n=n, diagonals=[d for d in diagonals if not is_chord(d, n)])
    if not validate(T):
        raise ValueError(f"Fan construction for ears e_{i}, e_{j} is not a triangulation: {T.diagonals}")
    return T


def ring_ears(ring: Sequence[int]) -> List[Tuple[int, Diagonal]]:
    """(apex, ear) for every position of a sub-polygon given as a cyclic list of point indices."""
    k = len(ring)
    return [(ring[t], tuple(sorted((ring[t - 1], ring[(t + 1) % k])))) for t in range(k)]


def maximal_ear_pairs(P: CirclePointSet, ring: Optional[Sequence[int]] = None) -> List[Tuple[int, int]]:
    """
    Pairs of non-crossing ears whose shorter ear is longest.

    Returns:
        Apex pairs (smaller apex first), sorted; empty for sub-polygons with fewer than 5 points
    """
    ring = list(range(P.n)) if ring is None else list(ring)
    ears = ring_ears(ring)
    if len(ears) < 5:
        return []
    tol = P.tolerance
    scored = []
    for (u, eu), (v, ev) in combinations(ears, 2):
        if not crossing(eu, ev):
            ku, kv = P.key(*eu), P.key(*ev)
            scored.append((ku if ku <= kv else kv, (min(u, v), max(u, v))))
    best = max(s for s, _ in scored)
    return sorted(pair for s, pair in scored if compare_keys(s, best, tol) == Ordering.EQUAL)
