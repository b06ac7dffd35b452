"""
Inputs with symmetric quadruples.

The choice tree is searched breadth first, one emitted ear per layer. At every layer each
branch proposes its admissible ears (the shorter ear of some maximal ear pair), children
reaching the same state are merged, and every branch whose sorted prefix of emitted keys
is beaten is dropped. Emitted keys never decrease along a branch, so a prefix is also the
prefix of every leaf below it and the pruning cannot lose an optimal triangulation.
"""
import bisect
import logging
from typing import Any, Callable, Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from models.circle import CirclePointSet, Diagonal, Ordering, cartesian_points, compare_keys
from models.errors import LimitIsZero, TooLarge, TooSmall
from models.triangulation import ScoreKind, ScoreVector, Triangulation, compare_sequences
from utils.settings import get_settings

logger = logging.getLogger(__name__)

OrderKey = Callable[[Diagonal], Any]


class ChoiceNode(NamedTuple):
    ring: Tuple[int, ...]
    diagonals: FrozenSet[Diagonal]
    keys: Tuple[Any, ...]
    path: Tuple[Any, ...]


class EarChoice(NamedTuple):
    apex: int
    diagonal: Diagonal
    key: Any


class EnumerationResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    triangulations: List[Triangulation]
    truncated: bool = False
    count: int
    score: Optional[ScoreVector] = None


def admissible_ears(P: CirclePointSet, ring: Sequence[int]) -> List[EarChoice]:
    """Ears that can start an optimal triangulation of the sub-polygon `ring`."""
    k = len(ring)
    tol = P.tolerance
    if k < 4:
        return []
    if k == 4:
        options = [
            EarChoice(ring[1], (ring[0], ring[2]), P.key(ring[0], ring[2])),
            EarChoice(ring[2], (ring[1], ring[3]), P.key(ring[1], ring[3])),
        ]
        best = max(o.key for o in options)
        return [o for o in options if compare_keys(o.key, best, tol) == Ordering.EQUAL]

    ears = [EarChoice(ring[t], (ring[t - 1], ring[(t + 1) % k]), P.key(ring[t - 1], ring[(t + 1) % k]))
            for t in range(k)]

    def adjacent(s: int, t: int) -> bool:
        return (s - t) % k in (1, k - 1)

    t0, t1, t2 = sorted(range(k), key=lambda t: ears[t].key, reverse=True)[:3]
    pair_value = ears[t1].key if not adjacent(t0, t1) else ears[t2].key

    long_enough = [t for t in range(k) if compare_keys(ears[t].key, pair_value, tol) != Ordering.LESS]
    chosen = []
    for t in long_enough:
        if compare_keys(ears[t].key, pair_value, tol) != Ordering.EQUAL:
            continue
        if any(s != t and not adjacent(s, t) for s in long_enough):
            chosen.append(ears[t])
    return chosen


def _normalize(d: Diagonal) -> Diagonal:
    a, b = d
    return (a, b) if a < b else (b, a)


def _search(P: CirclePointSet, order_key: OrderKey, ring: Optional[Sequence[int]] = None) -> List[ChoiceNode]:
    settings = get_settings()
    tol = P.tolerance
    start = tuple(range(P.n)) if ring is None else tuple(ring)
    layer = [ChoiceNode(start, frozenset(), (), ())]
    depth = 0
    while len(layer[0].ring) > 3:
        children: Dict[Tuple[Tuple[int, ...], FrozenSet[Diagonal]], ChoiceNode] = {}
        for node in layer:
            for ear in admissible_ears(P, node.ring):
                d = _normalize(ear.diagonal)
                keys = list(node.keys)
                bisect.insort(keys, ear.key)
                child = ChoiceNode(
                    ring=tuple(v for v in node.ring if v != ear.apex),
                    diagonals=node.diagonals | {d},
                    keys=tuple(keys),
                    path=node.path + (order_key(d),),
                )
                state = (child.ring, child.diagonals)
                seen = children.get(state)
                if seen is None or child.path < seen.path:
                    children[state] = child
        if len(children) > settings.max_branches:
            raise TooLarge(f"Choice tree layer {depth + 1} has {len(children)} branches "
                           f"(limit {settings.max_branches})")

        best = None
        for child in children.values():
            if best is None or compare_sequences(child.keys, best, tol) == Ordering.GREATER:
                best = child.keys
        layer = [c for c in children.values() if compare_sequences(c.keys, best, tol) == Ordering.EQUAL]
        depth += 1
        logger.debug("Layer %d: %d children, %d kept", depth, len(children), len(layer))

    leaves: Dict[FrozenSet[Diagonal], ChoiceNode] = {}
    for node in layer:
        seen = leaves.get(node.diagonals)
        if seen is None or node.path < seen.path:
            leaves[node.diagonals] = node
    return list(leaves.values())


def enumerate_optimal(P: CirclePointSet, limit: Optional[int] = None) -> EnumerationResult:
    """All length-maximal triangulations, sorted by diagonal set, at most `limit` of them."""
    limit = get_settings().enumerate_limit if limit is None else limit
    if limit < 1:
        raise LimitIsZero(f"Enumeration limit must be at least 1, got {limit}")

    leaves = _search(P, lambda d: d)
    triangulations = sorted((Triangulation(n=P.n, diagonals=leaf.diagonals) for leaf in leaves),
                            key=lambda t: t.diagonals)
    count = len(triangulations)
    truncated = count > limit
    if truncated:
        logger.warning("Found %d optimal triangulations; returning the first %d", count, limit)
    return EnumerationResult(
        triangulations=triangulations[:limit],
        truncated=truncated,
        count=count,
        score=ScoreVector(kind=ScoreKind.LENGTH, entries=leaves[0].keys, tolerance=P.tolerance),
    )


def regular_count(n: int, allow_square: bool = False) -> int:
    """Number of optimal triangulations of the regular n-gon."""
    if n == 4 and allow_square:
        return 2
    if n < 5:
        raise TooSmall(f"The closed form needs n >= 5, got {n}")
    return n * 2 ** (n - 5)


def canonical_rank(P: CirclePointSet) -> List[int]:
    """Position of every point when counting counter-clockwise from the lexicographically smallest point."""
    pts = cartesian_points(P)
    start = min(range(P.n), key=lambda i: (pts[i][0], pts[i][1]))
    return [(v - start) % P.n for v in range(P.n)]


def solve_canonical(P: CirclePointSet) -> Triangulation:
    """
    One optimal triangulation chosen deterministically.

    Tied ears are ordered by their endpoints in the relabeled order and the leftmost
    optimal leaf of the full choice tree is returned.
    """
    return Triangulation(n=P.n, diagonals=canonical_diagonals(P, range(P.n)))


def canonical_diagonals(P: CirclePointSet, ring: Sequence[int]) -> List[Diagonal]:
    """Canonical optimal triangulation of the sub-polygon `ring` of P."""
    rank = canonical_rank(P)

    def order_key(d: Diagonal) -> Tuple[int, int]:
        a, b = rank[d[0]], rank[d[1]]
        return (a, b) if a < b else (b, a)

    leaves = _search(P, order_key, ring)
    leftmost = min(leaves, key=lambda leaf: leaf.path)
    logger.info("Canonical choice among %d optimal triangulations", len(leaves))
    return sorted(leftmost.diagonals)
