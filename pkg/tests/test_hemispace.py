from fractions import Fraction

import pytest

from src.errors import PreconditionError
from src.forms import parse_form
from src.halfspace import OPEN, halfspace_points
from src.hemispace import (Hemispace, halfspace_sets, hemispaces_not_halfspaces, is_hemispace, kakutani_separate,
                           pasch_check, pasch_intersection, u_invariance_failures)
from src.hyperfield import RationalField
from src.parsing import parse_point, parse_points


class TestHemispaces:
    def test_ray_is_a_hemispace(self, S):
        assert is_hemispace(parse_points('(1);(0)', S), S, 1)
        assert not is_hemispace(parse_points('(1);(-1)', S), S, 1)

    def test_complement(self, S):
        X = Hemispace(S, 1, frozenset(parse_points('(1)', S)))
        assert X.complement().points == frozenset(parse_points('(0);(-1)', S))
        assert parse_point('(1)', S) in X

    def test_some_hemispaces_are_not_halfspaces(self, S):
        extra = hemispaces_not_halfspaces(S, 2)
        assert extra
        known = set(halfspace_sets(S, 2))
        assert all(X not in known for X in extra)


class TestKakutani:
    def test_separates_opposite_rays(self, S):
        A = parse_points('(1,0)', S)
        B = parse_points('(-1,0)', S)
        X = kakutani_separate(A, B, S, 2)
        assert all(a in X for a in A)
        assert not any(b in X for b in B)
        assert is_hemispace(X.points, S, 2)

    def test_hull_sides(self, S):
        A = parse_points('(1,0);(0,1);(1,1)', S)
        B = parse_points('(-1,-1)', S)
        X = kakutani_separate(A, B, S, 2)
        assert set(A) <= X.points
        assert is_hemispace(X.points, S, 2)

    def test_empty_side(self, S):
        assert not kakutani_separate([], parse_points('(1)', S), S, 1).points

    def test_sides_must_be_disjoint_and_convex(self, S):
        with pytest.raises(PreconditionError):
            kakutani_separate(parse_points('(1)', S), parse_points('(1)', S), S, 1)
        with pytest.raises(PreconditionError):
            kakutani_separate(parse_points('(1,0);(-1,0)', S), parse_points('(0,1)', S), S, 2)


class TestPasch:
    def test_diagonals_meet(self, S):
        r, q1, q2 = parse_points('(-1,-1);(1,0);(0,1)', S)
        p1, p2 = parse_points('(0,-1);(-1,0)', S)
        assert pasch_intersection(r, q1, q2, p1, p2) == frozenset(parse_points('(0,0)', S))
        assert pasch_check(r, q1, q2, p1, p2)

    def test_precondition(self, S):
        r, q1, q2 = parse_points('(-1,-1);(1,0);(0,1)', S)
        with pytest.raises(PreconditionError):
            pasch_intersection(r, q1, q2, parse_point('(1,1)', S), q2)


class TestRescaling:
    def test_halfspace_preimage_is_invariant(self, S):
        Q = RationalField()
        X = halfspace_points(parse_form('X1', S), OPEN)
        rational = parse_points('(2);(-1);(0)', Q)
        scalings = [(Q.make(3),), (Q.make(Fraction(1, 2)),)]
        assert u_invariance_failures(X, rational, scalings) == []

    def test_rescaling_must_be_positive(self, S):
        Q = RationalField()
        with pytest.raises(PreconditionError):
            u_invariance_failures(parse_points('(1)', S), parse_points('(2)', Q), [(Q.make(-1),)])
