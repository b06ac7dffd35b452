from fractions import Fraction
from itertools import combinations

import pytest

from models.circle import Ordering, from_degrees, regular_polygon
from models.errors import CrossingEars, IndexOutOfRange, KindMismatch, LengthMismatch, SameApex
from models.triangulation import (
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
from solvers.oracle import enumerate_triangulations
from utils.generators import random_point_set

FAN = Triangulation(n=6, diagonals=[(0, 2), (0, 3), (0, 4)])
STAR = Triangulation(n=6, diagonals=[(0, 2), (2, 4), (0, 4)])
OPTIMUM_SIX = Triangulation(n=6, diagonals=[(1, 3), (0, 3), (3, 5)])


class TestValidate:
    def test_normalizes_diagonals(self):
        T = Triangulation(n=6, diagonals=[(3, 0), (3, 1), (5, 3), (0, 3)])
        assert T.diagonals == ((0, 3), (1, 3), (3, 5))

    @pytest.mark.parametrize("diagonals, valid", [
        ([(0, 2), (0, 3), (0, 4)], True),
        ([(0, 2), (2, 4), (0, 4)], True),
        ([(0, 3), (1, 4), (0, 2)], False),   # crossing
        ([(0, 2), (0, 3)], False),           # too few
        ([(0, 1), (0, 3), (0, 4)], False),   # polygon edge
        ([(0, 5), (0, 3), (0, 4)], False),   # wrap-around edge
        ([(0, 2), (0, 3), (0, 7)], False),   # out of range
    ])
    def test_validate(self, diagonals, valid):
        assert validate(Triangulation(n=6, diagonals=diagonals)) is valid

    def test_validate_n_mismatch(self):
        assert not validate(FAN, n=7)


class TestStructure:
    def test_triangles(self):
        assert triangles_of(FAN) == [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]
        assert len(triangles_of(STAR)) == 4

    def test_ears(self):
        assert ears_of(FAN) == [(0, 2), (0, 4)]
        assert ears_of(STAR) == [(0, 2), (0, 4), (2, 4)]

    def test_dual_path(self):
        path = dual_path(FAN)
        assert isinstance(path, DualPath)
        assert path.triangles == [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]

    def test_dual_not_a_path(self):
        found = dual_path(STAR)
        assert isinstance(found, NotAPath)
        assert found.branching == (0, 2, 4) and found.degree == 3

    @pytest.mark.parametrize("d1, d2, expected", [
        ((0, 2), (1, 3), True),
        ((0, 2), (2, 4), False),
        ((0, 3), (1, 2), False),
        ((1, 4), (5, 2), True),
        ((0, 3), (3, 5), False),
    ])
    def test_crosses(self, d1, d2, expected):
        assert crosses(d1, d2) is expected
        assert crosses(d2, d1) is expected


class TestScores:
    def test_length_vector(self, six_point):
        score = length_vector(OPTIMUM_SIX, six_point)
        assert score.kind == ScoreKind.LENGTH
        assert score.entries == (Fraction(115, 360), Fraction(138, 360), Fraction(162, 360))

    def test_angle_vector_sums_to_half_turns(self, six_point):
        score = angle_vector(OPTIMUM_SIX, six_point)
        assert len(score.entries) == 12
        assert sum(score.entries) == 2
        assert list(score.entries) == sorted(score.entries)

    def test_score_vector_must_be_sorted(self):
        with pytest.raises(ValueError):
            ScoreVector(kind=ScoreKind.LENGTH, entries=(2, 1))

    def test_compare_lex(self, six_point):
        a = length_vector(OPTIMUM_SIX, six_point)
        b = length_vector(FAN, six_point)
        assert compare_lex(a, b) == Ordering.GREATER
        assert compare_lex(b, a) == Ordering.LESS
        assert compare_lex(a, a) == Ordering.EQUAL

    def test_compare_lex_errors(self, six_point):
        with pytest.raises(KindMismatch):
            compare_lex(length_vector(FAN, six_point), angle_vector(FAN, six_point))
        with pytest.raises(LengthMismatch):
            compare_lex(ScoreVector(kind=ScoreKind.LENGTH, entries=(1,)),
                        ScoreVector(kind=ScoreKind.LENGTH, entries=(1, 2)))

    @pytest.mark.parametrize("n, seed", [(6, 0), (7, 1), (7, 2)])
    def test_angle_and_length_orders_agree(self, n, seed):
        P = random_point_set(n, seed)
        scored = [(angle_vector(T, P), length_vector(T, P)) for T in enumerate_triangulations(n)]
        for (a1, l1), (a2, l2) in combinations(scored, 2):
            assert compare_lex(a1, a2) == compare_lex(l1, l2)

    @pytest.mark.slow
    def test_angle_and_length_orders_agree_exhaustive(self):
        for n in range(5, 10):
            for P in (random_point_set(n, n), regular_polygon(n)):
                scored = [(angle_vector(T, P), length_vector(T, P)) for T in enumerate_triangulations(n)]
                for (a1, l1), (a2, l2) in combinations(scored, 2):
                    assert compare_lex(a1, a2) == compare_lex(l1, l2)


class TestFanPair:
    def test_shared_vertex(self):
        assert fan_pair_triangulation(6, 2, 4) == OPTIMUM_SIX

    def test_opposite_ears(self, six_point):
        T = fan_pair_triangulation(six_point, 1, 4)
        assert validate(T)
        assert set(ears_of(T)) == {(0, 2), (3, 5)}

    def test_wrap_around(self):
        T = fan_pair_triangulation(8, 6, 1)
        assert validate(T)
        assert {(5, 7), (0, 2)} <= set(ears_of(T))

    def test_errors(self):
        with pytest.raises(CrossingEars):
            fan_pair_triangulation(6, 2, 3)
        with pytest.raises(SameApex):
            fan_pair_triangulation(6, 2, 2)
        with pytest.raises(IndexOutOfRange):
            fan_pair_triangulation(6, 0, 6)


class TestMaximalEarPairs:
    def test_six_point(self, six_point):
        assert maximal_ear_pairs(six_point) == [(2, 4), (2, 5)]

    def test_sub_polygon(self, six_point):
        # ears of [0,1,3,4,5]: apex 1 -> (0,3), 3 -> (1,4), 4 -> (3,5), 5 -> (4,0), 0 -> (5,1)
        assert maximal_ear_pairs(six_point, [0, 1, 3, 4, 5]) == [(1, 4)]

    def test_small_ring(self):
        assert maximal_ear_pairs(from_degrees([0, 90, 180, 270])) == []
