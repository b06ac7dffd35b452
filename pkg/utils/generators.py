"""
Seeded instance factories: regular polygons, random sets, equal-ear sets and the square.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from models.circle import (
    TAU,
    CirclePointSet,
    DegeneracyKind,
    NumericMode,
    classify_degeneracy,
    from_radians,
    from_turns,
)
from models.errors import DuplicatePoint, GenerationFailed, TooSmall
from utils.settings import get_settings

logger = logging.getLogger(__name__)

RANDOM_DENOMINATOR = 2 ** 32
# Float sets for the bench use a tighter tolerance than interactive input
BENCH_REL_TOL = 1e-14
MAX_ATTEMPTS = 1000


def _check_n(n: int, minimum: int = 4) -> None:
    if n < minimum:
        raise TooSmall(f"At least {minimum} points are required, got {n}")


def regular_document(n: int) -> Dict[str, Any]:
    """Turn strings i/n, unreduced."""
    _check_n(n)
    return {"angles_turns": [f"{i}/{n}" for i in range(n)]}


def square_document() -> Dict[str, Any]:
    return {"points": [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]]}


def random_point_set(
    n: int,
    seed: int,
    mode: NumericMode = NumericMode.EXACT,
    verify: Optional[bool] = None,
) -> CirclePointSet:
    """
    Uniform random points on the circle.

    Exact sets use distinct multiples of 2^-32 turn and are redrawn until every
    diagonal length is distinct; the check is skipped above `precondition_check_max_n`
    unless `verify` forces it. Float sets are drawn in radians for the bench.
    """
    _check_n(n)
    rng = np.random.default_rng(seed)
    if verify is None:
        verify = n <= get_settings().precondition_check_max_n

    for attempt in range(1, MAX_ATTEMPTS + 1):
        if mode == NumericMode.FLOAT:
            try:
                P = from_radians(sorted(rng.random(n) * TAU), rel_tol=BENCH_REL_TOL)
            except DuplicatePoint:
                continue
        else:
            draws = rng.choice(RANDOM_DENOMINATOR, size=n, replace=False)
            P = from_turns(sorted(Fraction(int(r), RANDOM_DENOMINATOR) for r in draws))

        if not verify or classify_degeneracy(P).kind == DegeneracyKind.DISTINCT_DIAGONALS:
            if attempt > 1:
                logger.info("Random set n=%d seed=%d accepted after %d draws", n, seed, attempt)
            return P
    raise GenerationFailed(f"No random set with distinct diagonals after {MAX_ATTEMPTS} draws (n={n}, seed={seed})")


def _top_ears_have_tie(P: CirclePointSet, size: int = 4) -> bool:
    keys = sorted((P.key((v - 1) % P.n, (v + 1) % P.n) for v in range(P.n)), reverse=True)[:size]
    return any(a == b for a, b in zip(keys, keys[1:]))


def equal_ears_point_set(n: int, seed: int, max_attempts: int = MAX_ATTEMPTS) -> CirclePointSet:
    """
    Exact set whose ears at p2 and p4 have equal length and share p3, without any
    symmetric quadruple, and with an equal pair among the four longest ears.

    The gaps g_i = theta_{i+1} - theta_i are integers with g4 = g1 + g2 - g3, so that
    arc(p1 p3) = arc(p3 p5). The three gaps around the pair are drawn from a larger
    range so the pair tends to sit among the longest ears.
    """
    _check_n(n, 6)
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        gaps: List[int] = [int(g) for g in rng.integers(600_000, 1_100_000, size=n)]
        gaps[1], gaps[2], gaps[3] = (int(g) for g in rng.integers(1_000_000, 1_400_000, size=3))
        gaps[4] = gaps[1] + gaps[2] - gaps[3]
        total = sum(gaps)
        thetas, position = [], 0
        for g in gaps:
            thetas.append(Fraction(position, total))
            position += g

        P = from_turns(thetas)
        if not _top_ears_have_tie(P):
            continue
        if classify_degeneracy(P).kind != DegeneracyKind.NO_SYMMETRIC_QUADRUPLE:
            continue
        logger.info("Equal-ears set n=%d seed=%d accepted after %d draws", n, seed, attempt)
        return P
    raise GenerationFailed(f"No equal-ears set after {max_attempts} draws (n={n}, seed={seed})")


def equal_pair_point_set(n: int, seed: int, max_attempts: int = MAX_ATTEMPTS) -> CirclePointSet:
    """
    Exact set with one pair of equal ears sharing a point at a seeded position, and
    no symmetric quadruple.

    For a drawn start i the gap after p_{i+3} is g_i + g_{i+1} - g_{i+2}, which makes
    the ears at p_{i+1} and p_{i+3} equally long. Draws with a non-positive gap or
    with a symmetric quadruple are redrawn.
    """
    _check_n(n, 5)
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        gaps: List[int] = [int(g) for g in rng.integers(100_000, 1_000_000, size=n)]
        i = int(rng.integers(n))
        g0, g1, g2 = gaps[i], gaps[(i + 1) % n], gaps[(i + 2) % n]
        gaps[(i + 3) % n] = g0 + g1 - g2
        if gaps[(i + 3) % n] <= 0:
            continue
        total = sum(gaps)
        thetas, position = [], 0
        for g in gaps:
            thetas.append(Fraction(position, total))
            position += g

        P = from_turns(thetas)
        if classify_degeneracy(P).kind != DegeneracyKind.NO_SYMMETRIC_QUADRUPLE:
            continue
        logger.info("Equal-pair set n=%d seed=%d start=%d accepted after %d draws", n, seed, i, attempt)
        return P
    raise GenerationFailed(f"No equal-pair set after {max_attempts} draws (n={n}, seed={seed})")


def permuted_points(points: List[List[float]], seed: int) -> List[List[float]]:
    """The same coordinates in a seeded random order."""
    order = np.random.default_rng(seed).permutation(len(points))
    return [list(points[int(i)]) for i in order]
