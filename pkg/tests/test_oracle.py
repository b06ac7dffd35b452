from fractions import Fraction

import pytest

from models.circle import DegeneracyKind, classify_degeneracy, key_length, regular_polygon
from models.errors import TooLarge
from models.triangulation import (
    DualPath,
    Triangulation,
    dual_path,
    ears_of,
    length_keys,
    maximal_ear_pairs,
    validate,
)
from solvers.oracle import (
    best_diagonal_sets,
    enumerate_triangulations,
    is_unique_optimum,
    optimal_set,
    polygon_diagonal_sets,
)
from utils.generators import equal_ears_point_set, equal_pair_point_set, random_point_set

CATALAN = {4: 2, 5: 5, 6: 14, 7: 42, 8: 132, 9: 429, 10: 1430}


def apex_of(ear, n):
    a, b = ear
    return (a + 1) % n if (b - a) % n == 2 else (b + 1) % n


@pytest.mark.parametrize("n", sorted(CATALAN))
def test_enumeration_counts(n):
    found = list(enumerate_triangulations(n))
    assert len(found) == CATALAN[n]
    assert len({T.diagonals for T in found}) == CATALAN[n]
    assert all(validate(T) for T in found)


def test_enumeration_guard(settings_env):
    with pytest.raises(TooLarge):
        next(enumerate_triangulations(17))
    settings_env(oracle_max_n=8)
    with pytest.raises(TooLarge):
        next(enumerate_triangulations(9))


def test_sub_polygon_enumeration():
    found = list(polygon_diagonal_sets([2, 5, 7, 9, 11]))
    assert len(found) == 5
    assert all(len(d) == 2 for d in found)


def test_six_point_unique(six_point):
    result = optimal_set(six_point)
    assert result.unique
    assert result.winners[0].diagonals == ((0, 3), (1, 3), (3, 5))
    assert result.score.entries == (Fraction(115, 360), Fraction(138, 360), Fraction(162, 360))


def test_quadrilateral(deg):
    result = optimal_set(deg(0, 90, 180, 200))
    assert [T.diagonals for T in result.winners] == [((0, 2),)]


def test_square(square):
    result = optimal_set(square)
    assert [T.diagonals for T in result.winners] == [((0, 2),), ((1, 3),)]
    assert not is_unique_optimum(square)


def test_regular_hexagon(hexagon):
    result = optimal_set(hexagon)
    assert len(result.winners) == 12
    assert [key_length(k) for k in result.score.entries] == pytest.approx([3 ** 0.5, 3 ** 0.5, 2.0])
    assert [T.diagonals for T in result.winners] == sorted(T.diagonals for T in result.winners)


def test_regular_pentagon():
    P = regular_polygon(5)
    assert len(optimal_set(P).winners) == 5
    assert not is_unique_optimum(P)


def test_best_diagonal_sets_keeps_ties(hexagon):
    best, winners = best_diagonal_sets(hexagon, polygon_diagonal_sets([0, 1, 2, 3]))
    assert best == [Fraction(1, 3)]
    assert sorted(winners) == [[(0, 2)], [(1, 3)]]


def check_structure(P):
    """Every winner: dual is a path, two ears forming a maximal pair; removing an ear stays optimal."""
    n = P.n
    for T in optimal_set(P, cross_check=False).winners:
        assert isinstance(dual_path(T), DualPath)
        ears = ears_of(T)
        assert len(ears) == 2
        pair = tuple(sorted(apex_of(e, n) for e in ears))
        assert pair in maximal_ear_pairs(P)

        if n <= 5:
            continue
        for ear in ears:
            apex = apex_of(ear, n)
            ring = [v for v in range(n) if v != apex]
            best, _ = best_diagonal_sets(P, polygon_diagonal_sets(ring))
            rest = [d for d in T.diagonals if d != ear]
            assert length_keys(rest, P) == best


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_winner_structure(n):
    check_structure(random_point_set(n, n))
    check_structure(regular_polygon(n))


def test_shortest_diagonal_is_an_ear():
    P = random_point_set(8, 3)
    for T in enumerate_triangulations(8):
        shortest = min(T.diagonals, key=lambda d: P.key(*d))
        assert shortest in ears_of(T)


@pytest.mark.parametrize("n", range(5, 10))
def test_uniqueness_without_symmetric_quadruples(n):
    for seed in range(3):
        assert is_unique_optimum(random_point_set(n, seed))
    if n >= 6:
        P = equal_ears_point_set(n, n)
        assert classify_degeneracy(P).kind == DegeneracyKind.NO_SYMMETRIC_QUADRUPLE
        assert is_unique_optimum(P)
    assert is_unique_optimum(equal_pair_point_set(n, n))


def test_distinct_distances_give_unique_optimum(deg):
    # All 15 pairwise distances differ, chords included.
    P = deg(0, 31, 75, 128, 194, 261)
    keys = [P.key(i, j) for i in range(6) for j in range(i + 1, 6)]
    assert len(set(keys)) == len(keys)
    assert is_unique_optimum(P)


@pytest.mark.slow
def test_structure_exhaustive():
    for n in range(5, 11):
        for seed in range(10):
            check_structure(random_point_set(n, seed))
        check_structure(regular_polygon(n))
    for n in range(5, 10):
        P = random_point_set(n, 100 + n)
        for T in enumerate_triangulations(n):
            shortest = min(T.diagonals, key=lambda d: P.key(*d))
            assert shortest in ears_of(T)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(5, 13))
def test_uniqueness_acceptance(n):
    for seed in range(500):
        assert len(optimal_set(random_point_set(n, seed), cross_check=False).winners) == 1
        assert len(optimal_set(equal_pair_point_set(n, seed), cross_check=False).winners) == 1


def test_winners_are_triangulations(hexagon):
    for T in optimal_set(hexagon).winners:
        assert isinstance(T, Triangulation) and validate(T)
