"""
Linear-time ear selection.

The sweep keeps the surviving points on a doubly linked ring and caches the chord key
of every ear. Removing an apex kills three ears and creates two.

Ears spanning less than half a turn ("narrow") only get longer when a neighbour is
removed; the at most two ears spanning half a turn or more ("wide") only get shorter.
The state therefore keeps every wide ear in `wide` and a short sorted list of the
longest narrow ears in `tracked`, with `bound` an upper limit on the key of every
narrow ear left out of that list. The 3 (simplified) or 4 (extended) longest ears are
read off those two lists in constant time; a full rescan happens only when the list
no longer reaches above `bound`. Sub-polygons of at most 5 (simplified) or 8
(extended) points are finished by exhaustive search.
"""
import logging
from typing import Any, List, Optional, Sequence

from models.circle import (
    CirclePointSet,
    DegeneracyKind,
    Diagonal,
    OperationCounter,
    Ordering,
    classify_degeneracy,
    compare_keys,
)
from models.errors import PreconditionViolated, SolverInconsistency
from models.triangulation import Triangulation, maximal_ear_pairs
from utils.settings import get_settings

from .degenerate import canonical_diagonals
from .oracle import _length_score, best_diagonal_sets, polygon_diagonal_sets

logger = logging.getLogger(__name__)

SIMPLIFIED_TOP = 3
EXTENDED_TOP = 4
SIMPLIFIED_BASE = 5
EXTENDED_BASE = 8
# Narrow ears kept beyond the top list.
TRACK_SLACK = 3


class SolverState:
    """Mutable sweep state; not shareable while a solve is running."""

    def __init__(self, P: CirclePointSet, top_size: int, counter: Optional[OperationCounter] = None,
                 debug: Optional[bool] = None):
        n = P.n
        self.P = P
        self.thetas = P.thetas
        self.full = P.full
        self.tol = P.tolerance
        self.counter = counter if counter is not None else OperationCounter()
        self.debug = get_settings().debug_checks if debug is None else debug
        self.top_size = top_size
        self.capacity = top_size + TRACK_SLACK

        self.prev = [(v - 1) % n for v in range(n)]
        self.next = [(v + 1) % n for v in range(n)]
        self.alive = [True] * n
        self.size = n
        self.start = 0
        self.output: List[Diagonal] = []

        self.ear_key: List[Any] = [None] * n
        self.tracked: List[int] = []
        self.wide: List[int] = []
        self.bound: Any = None
        self.rescan()
        top = self.candidate_top(min(top_size, n))
        self.top: List[int] = self.scan_top(min(top_size, n)) if top is None else top

    # ── primitives ──────────────────────────────────────────────────────────────
    def refresh(self, apex: int) -> bool:
        """Recompute the ear key at `apex`; True when the ear spans half a turn or more."""
        self.counter.arcs += 1
        span = (self.thetas[self.next[apex]] - self.thetas[self.prev[apex]]) % self.full
        other = self.full - span
        self.ear_key[apex] = span if span <= other else other
        return span >= other

    def compare(self, x: Any, y: Any) -> Ordering:
        self.counter.comparisons += 1
        return compare_keys(x, y, self.tol)

    def ears_cross(self, u: int, v: int) -> bool:
        """Ears at distinct apexes of a ring of size >= 5 cross iff the apexes are adjacent."""
        return self.next[u] == v or self.prev[u] == v

    def ring(self, start: Optional[int] = None) -> List[int]:
        first = self.start if start is None else start
        out, v = [first], self.next[first]
        while v != first:
            out.append(v)
            v = self.next[v]
        return out

    # ── top list ────────────────────────────────────────────────────────────────
    def insert(self, ordered: List[int], x: int) -> List[int]:
        """Insert `x` into a list sorted descending by ear key, equal keys by apex."""
        kx = self.ear_key[x]
        pos = len(ordered)
        while pos > 0:
            order = self.compare(kx, self.ear_key[ordered[pos - 1]])
            if order == Ordering.GREATER or (order == Ordering.EQUAL and x < ordered[pos - 1]):
                pos -= 1
            else:
                break
        ordered.insert(pos, x)
        return ordered

    def scan_top(self, size: int, start: Optional[int] = None) -> List[int]:
        """Longest `size` ears by a walk over the whole ring."""
        best: List[int] = []
        for v in self.ring(start):
            best = self.insert(best, v)[:size]
        return best

    def above_bound(self, x: int) -> bool:
        return self.bound is None or self.compare(self.ear_key[x], self.bound) == Ordering.GREATER

    def trim(self) -> None:
        """Cut `tracked` to capacity; the cut entry becomes the new bound."""
        if len(self.tracked) <= self.capacity:
            return
        self.bound = self.ear_key[self.tracked[self.capacity]]
        del self.tracked[self.capacity:]
        while self.tracked and not self.above_bound(self.tracked[-1]):
            self.tracked.pop()

    def rescan(self) -> None:
        """Rebuild `wide`, `tracked` and `bound` from the whole ring."""
        self.wide, self.tracked, self.bound = [], [], None
        for v in self.ring():
            if self.refresh(v):
                self.wide.append(v)
            else:
                self.tracked = self.insert(self.tracked, v)[:self.capacity + 1]
        self.trim()

    def candidate_top(self, want: int, exclude: Sequence[int] = (), fresh: Sequence[int] = ()) -> Optional[List[int]]:
        """
        Longest `want` ears from the tracked and wide lists plus `fresh` apexes, or None
        when untracked narrow ears could still reach the result.
        """
        pool = [x for x in self.tracked if x not in exclude and x not in fresh][:want]
        for x in self.wide:
            if x not in exclude and x not in fresh:
                self.insert(pool, x)
        for x in fresh:
            self.insert(pool, x)
        top = pool[:want]
        if self.bound is None or (len(top) == want and self.above_bound(top[-1])):
            return top
        return None

    # ── ring edits ──────────────────────────────────────────────────────────────
    def splice_out(self, v: int):
        a, b = self.prev[v], self.next[v]
        self.next[a], self.prev[b] = b, a
        saved = (self.ear_key[a], self.ear_key[b])
        self.refresh(a)
        self.refresh(b)
        return saved

    def splice_in(self, v: int, saved) -> None:
        a, b = self.prev[v], self.next[v]
        self.next[a], self.prev[b] = v, v
        self.ear_key[a], self.ear_key[b] = saved

    def emit(self, apex: int) -> None:
        if not self.alive[apex]:
            raise SolverInconsistency(f"Apex {apex} was already removed")
        a, b = self.prev[apex], self.next[apex]
        if self.debug:
            self._check_emission(apex)
        self.output.append((min(a, b), max(a, b)))
        update_top_ears(self, apex)

    def _check_emission(self, apex: int) -> None:
        pairs = maximal_ear_pairs(self.P, self.ring())
        if not any(apex in pair for pair in pairs):
            raise SolverInconsistency(f"Ear at apex {apex} is in no maximal ear pair")
        span = (self.thetas[self.next[apex]] - self.thetas[self.prev[apex]]) % self.full
        if span > self.full / 2:
            logger.warning("Emitted ear at apex %d spans more than a half turn", apex)


def update_top_ears(S: SolverState, removed_apex: int) -> SolverState:
    """
    Remove an apex whose ear was just emitted, refresh the two ears next to it and
    rebuild the top list. Constant work unless the tracked list ran dry.
    """
    v = removed_apex
    a, b = S.prev[v], S.next[v]

    S.next[a], S.prev[b] = b, a
    S.alive[v] = False
    S.size -= 1
    if S.start == v:
        S.start = b

    S.tracked = [x for x in S.tracked if x not in (a, v, b)]
    S.wide = [x for x in S.wide if x not in (a, v, b)]
    for x in dict.fromkeys((a, b)):
        if S.refresh(x):
            S.wide.append(x)
        elif S.above_bound(x):
            S.insert(S.tracked, x)
    S.trim()

    want = min(S.top_size, S.size)
    top = S.candidate_top(want)
    if top is None:
        logger.debug("Tracked ears exhausted after removing %d; rescanning %d ears", v, S.size)
        S.rescan()
        top = S.candidate_top(want)
        if top is None:
            top = S.scan_top(want)
    S.top = top

    if S.debug:
        full = S.scan_top(want)
        if [S.ear_key[x] for x in full] != [S.ear_key[x] for x in top]:
            raise SolverInconsistency(f"Top ears {top} disagree with full scan {full}")
    return S


def base_case_small(S: SolverState, strict: bool = True) -> List[Diagonal]:
    """
    Length-maximal triangulation of the remaining sub-polygon (4 to 8 points). Ties
    raise unless `strict` is off, in which case the canonical choice is returned.
    """
    ring = S.ring()
    if len(ring) == 3:
        return []
    if not 4 <= len(ring) <= EXTENDED_BASE:
        raise ValueError(f"Base case needs 4 to {EXTENDED_BASE} points, got {len(ring)}")
    _, winners = best_diagonal_sets(S.P, polygon_diagonal_sets(ring), _length_score(S.P))
    winners = [sorted((min(a, b), max(a, b)) for a, b in w) for w in winners]
    if len(winners) > 1:
        if strict:
            raise PreconditionViolated(
                f"Sub-polygon {ring} has {len(winners)} equally good triangulations (symmetric quadruple)"
            )
        logger.warning("Base case tie on %s; using the canonical choice", ring)
        return canonical_diagonals(S.P, ring)
    return winners[0]


def _require(P: CirclePointSet, allowed, check: Optional[bool]) -> None:
    if check is None:
        check = P.n <= get_settings().precondition_check_max_n
    if not check:
        return
    found = classify_degeneracy(P)
    if found.kind not in allowed:
        raise PreconditionViolated(f"Input is {found.kind.value}; solver needs {' or '.join(k.value for k in allowed)}")


def solve_simplified(P: CirclePointSet, counter: Optional[OperationCounter] = None,
                     check: Optional[bool] = None) -> Triangulation:
    """
    Ear selection for inputs whose diagonals all have distinct lengths: take the second
    longest ear if the two longest do not cross, else the third longest.
    """
    _require(P, (DegeneracyKind.DISTINCT_DIAGONALS,), check)
    S = SolverState(P, SIMPLIFIED_TOP, counter)
    while S.size > SIMPLIFIED_BASE:
        se0, se1, se2 = S.top
        k0, k1, k2 = (S.ear_key[x] for x in S.top)
        if S.compare(k0, k1) == Ordering.EQUAL or S.compare(k1, k2) == Ordering.EQUAL:
            raise PreconditionViolated("Two ears of equal length met during the sweep")
        chosen = se1 if not S.ears_cross(se0, se1) else se2
        logger.debug("k=%d: emit ear at apex %d", S.size, chosen)
        S.emit(chosen)
    S.output.extend(base_case_small(S))
    return Triangulation(n=P.n, diagonals=S.output)


def _pair_value(S: SolverState, ranked: List[int]) -> Any:
    """Length of the shorter ear of a maximal pair, from the longest ears of the ring."""
    if not S.ears_cross(ranked[0], ranked[1]):
        return S.ear_key[ranked[1]]
    return S.ear_key[ranked[2]]


def lookahead_value(S: SolverState, apex: int) -> Any:
    """
    Simulate emitting the ear at `apex` and return the length key of the next diagonal
    the sweep would commit to. Only the two neighbours of the apex are touched.
    """
    a, b = S.prev[apex], S.next[apex]
    saved = S.splice_out(apex)
    try:
        ranked = S.candidate_top(3, exclude=(apex,), fresh=(a, b))
        if ranked is None:
            ranked = S.scan_top(3, start=b)
            logger.debug("Lookahead at apex %d fell back to a full scan", apex)
        return _pair_value(S, ranked)
    finally:
        S.splice_in(apex, saved)


def select_extended(S: SolverState) -> List[int]:
    """Apexes to emit this step, for a ring of more than 8 points."""
    se0, se1, se2, se3 = S.top
    k0, k1, k2, k3 = (S.ear_key[x] for x in S.top)
    c01 = S.compare(k0, k1)
    c12 = S.compare(k1, k2)
    c23 = S.compare(k2, k3)

    if c01 == Ordering.EQUAL:
        if c12 == Ordering.EQUAL or S.ears_cross(se0, se1):
            raise PreconditionViolated("Equal ears that cross or three equal ears (symmetric quadruple)")
        # Unique maximal pair: both ears belong to the optimum.
        return [se0, se1]

    if c12 == Ordering.EQUAL:
        if c23 == Ordering.EQUAL or S.ears_cross(se1, se2):
            raise PreconditionViolated("Equal ears that cross or three equal ears (symmetric quadruple)")
        x1, x2 = S.ears_cross(se0, se1), S.ears_cross(se0, se2)
        if x1 and x2:
            return [se1, se2]
        if x1:
            return [se0, se2]
        if x2:
            return [se0, se1]
        return [se0]

    if c23 == Ordering.EQUAL:
        if not S.ears_cross(se0, se1):
            return [se1]
        if S.ears_cross(se2, se3):
            raise PreconditionViolated("Equal ears that cross (symmetric quadruple)")
        v2, v3 = lookahead_value(S, se2), lookahead_value(S, se3)
        order = S.compare(v2, v3)
        if order == Ordering.GREATER:
            return [se2]
        if order == Ordering.LESS:
            return [se3]
        # Same continuation length: it must be one of the two longest ears.
        if S.compare(v2, k0) == Ordering.EQUAL:
            return [se0]
        if S.compare(v2, k1) == Ordering.EQUAL:
            return [se1]
        raise SolverInconsistency(f"Lookahead tie at length {v2} matches neither of the two longest ears")

    return [se1] if not S.ears_cross(se0, se1) else [se2]


def solve_extended(P: CirclePointSet, counter: Optional[OperationCounter] = None,
                   check: Optional[bool] = None) -> Triangulation:
    """Ear selection for inputs without symmetric quadruples (equal lengths allowed)."""
    _require(P, (DegeneracyKind.DISTINCT_DIAGONALS, DegeneracyKind.NO_SYMMETRIC_QUADRUPLE), check)
    S = SolverState(P, EXTENDED_TOP, counter)
    while S.size > EXTENDED_BASE:
        chosen = select_extended(S)
        logger.debug("k=%d: emit ears at apexes %s", S.size, chosen)
        for apex in chosen:
            S.emit(apex)
    S.output.extend(base_case_small(S))
    return Triangulation(n=P.n, diagonals=S.output)
