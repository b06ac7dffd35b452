"""
Brute-force ground truth.
Enumerates every triangulation of the convex n-gon and keeps all length-maximal ones,
cross-checking the winner set against angle-vector scoring.
"""
import logging
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from models.circle import CirclePointSet, Diagonal, Ordering
from models.errors import SolverInconsistency, TooLarge
from models.triangulation import (
    ScoreKind,
    ScoreVector,
    Triangulation,
    angle_keys,
    compare_sequences,
    length_keys,
    triangles_of,
)
from utils.settings import get_settings

logger = logging.getLogger(__name__)


class OptimalSet(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    score: ScoreVector
    winners: List[Triangulation]

    @property
    def unique(self) -> bool:
        return len(self.winners) == 1


def _guard(n: int) -> None:
    limit = get_settings().oracle_max_n
    if n > limit:
        raise TooLarge(f"Exhaustive search is limited to n <= {limit}, got n = {n}")
    if n < 4:
        raise ValueError(f"At least 4 points are required, got {n}")


def polygon_diagonal_sets(vertices: Sequence[int]) -> Iterator[List[Diagonal]]:
    """
    Every triangulation of the convex polygon `vertices` (cyclic order) as a diagonal list.
    Splits on the edge (first, last): pick the apex of its triangle and recurse on both sides.
    """
    m = len(vertices)
    if m < 3:
        yield []
        return
    first, last = vertices[0], vertices[-1]
    for k in range(1, m - 1):
        apex = vertices[k]
        added = []
        if k > 1:
            added.append((first, apex))
        if k < m - 2:
            added.append((apex, last))
        for left in polygon_diagonal_sets(vertices[:k + 1]):
            for right in polygon_diagonal_sets(vertices[k:]):
                yield left + right + added


def enumerate_triangulations(n: int) -> Iterator[Triangulation]:
    _guard(n)
    for diagonals in polygon_diagonal_sets(list(range(n))):
        yield Triangulation(n=n, diagonals=diagonals)


def best_diagonal_sets(
    P: CirclePointSet,
    candidates: Iterator[List[Diagonal]],
    score=length_keys,
) -> Tuple[List[Any], List[List[Diagonal]]]:
    """Keep every candidate whose sorted key list is lexicographically maximal."""
    tol = P.tolerance
    best: Optional[List[Any]] = None
    winners: List[List[Diagonal]] = []
    for diagonals in candidates:
        keys = score(diagonals, P)
        if best is None:
            best, winners = keys, [diagonals]
            continue
        order = compare_sequences(keys, best, tol)
        if order == Ordering.GREATER:
            best, winners = keys, [diagonals]
        elif order == Ordering.EQUAL:
            winners.append(diagonals)
    return best, winners


def _length_score(P: CirclePointSet):
    table = {}

    def score(diagonals, _):
        keys = []
        for d in diagonals:
            k = table.get(d)
            if k is None:
                k = table[d] = P.key(*d)
            keys.append(k)
        keys.sort()
        return keys
    return score


def _angle_score(P: CirclePointSet):
    def score(diagonals, _):
        T = Triangulation.model_construct(n=P.n, diagonals=tuple(diagonals))
        return angle_keys(triangles_of(T), P)
    return score


def optimal_set(P: CirclePointSet, cross_check: bool = True) -> OptimalSet:
    _guard(P.n)
    best, winners = best_diagonal_sets(P, polygon_diagonal_sets(list(range(P.n))), _length_score(P))
    triangulations = sorted((Triangulation(n=P.n, diagonals=w) for w in winners), key=lambda t: t.diagonals)

    if cross_check:
        _, angle_winners = best_diagonal_sets(P, polygon_diagonal_sets(list(range(P.n))), _angle_score(P))
        by_angle = {Triangulation(n=P.n, diagonals=w).diagonals for w in angle_winners}
        if by_angle != {t.diagonals for t in triangulations}:
            raise SolverInconsistency(
                f"Angle scoring selects {len(by_angle)} winners, length scoring {len(triangulations)}"
            )

    logger.debug("Oracle: n=%d, %d winner(s)", P.n, len(triangulations))
    return OptimalSet(
        score=ScoreVector(kind=ScoreKind.LENGTH, entries=tuple(best), tolerance=P.tolerance),
        winners=triangulations,
    )


def is_unique_optimum(P: CirclePointSet) -> bool:
    return optimal_set(P, cross_check=False).unique
