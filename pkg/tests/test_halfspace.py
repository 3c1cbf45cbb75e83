import pytest

from src.convex import all_points, convex_subsets
from src.errors import ArityError, NoOrderingError, PreconditionError, SeparationNotFound, UnsupportedError
from src.forms import in_closed_hs, in_open_hs, parse_form
from src.halfspace import (CLOSED, OPEN, VARIETY, all_forms, closed_hs_separate_sign, closed_not_convex_witness,
                           enumerate_open_hs_containing, halfspace_points, open_hs_separate, query,
                           stringent_decomposition_check)
from src.parsing import parse_point, parse_points

NON_OPEN_SEP = '(-1,1);(0,0);(0,1);(1,0);(1,1)'


class TestForms:
    def test_all_forms_of_the_sign_line(self, S):
        assert len(all_forms(S, 1)) == 9
        assert len(all_forms(S, 1, include_constant=False)) == 6

    def test_five_element_forms_are_up_to_scaling(self, H5):
        # scaling by t pairs up the 24 nonzero forms
        assert len(all_forms(H5, 1)) == 13

    def test_infinite_rejected(self, QxZ):
        with pytest.raises(UnsupportedError):
            all_forms(QxZ, 1)

    def test_unordered_rejected(self, K):
        with pytest.raises(NoOrderingError):
            all_forms(K, 1)

    def test_query_kinds(self, S):
        phi = parse_form('X1 + X2', S)
        p = parse_point('(1,-1)', S)
        assert not query(phi, p, OPEN)
        assert query(phi, p, CLOSED)
        assert query(phi, p, VARIETY)
        with pytest.raises(ValueError):
            query(phi, p, 'half-open')


class TestHalfspacePoints:
    def test_closed_halfspace_is_not_convex(self):
        witness = closed_not_convex_witness()
        assert str(witness.form) == 'X1 + X2'
        assert len(witness.closed) == 6
        assert len(witness.open) == 3
        assert len(witness.variety) == 3
        assert not witness.convex
        assert set(witness.closed) == set(witness.open) | set(witness.variety)

    def test_open_halfspace_points(self, S):
        points = halfspace_points(parse_form('X2 + 1', S), OPEN)
        assert set(points) == set(parse_points('(-1,0);(0,0);(1,0);(-1,1);(0,1);(1,1)', S))

    def test_decomposition_holds_over_sign(self, S):
        report = stringent_decomposition_check(parse_form('X1 + X2', S))
        assert report.holds
        assert report.checked == 9

    def test_decomposition_fails_over_five_element(self, H5):
        report = stringent_decomposition_check(parse_form('X1 + X2', H5))
        assert not report.holds
        assert '(1,-t)' in report.witnesses

    def test_decomposition_needs_points_when_infinite(self, TR):
        phi = parse_form('X1', TR)
        with pytest.raises(UnsupportedError):
            stringent_decomposition_check(phi)
        report = stringent_decomposition_check(phi, parse_points('((+1,0));((-1,2));(0)', TR))
        assert report.holds and report.checked == 3


class TestSeparation:
    def test_only_one_open_halfspace_contains_t(self, S):
        forms = enumerate_open_hs_containing(parse_points(NON_OPEN_SEP, S))
        assert [str(phi) for phi in forms] == ['X2 + 1']

    def test_empty_set_is_in_every_open_halfspace(self, S):
        assert len(enumerate_open_hs_containing([], S, 2)) == 24
        assert len(enumerate_open_hs_containing([], S, 2, include_constant=True)) == 27
        with pytest.raises(ArityError):
            enumerate_open_hs_containing([])

    def test_no_open_separator(self, S):
        T = parse_points(NON_OPEN_SEP, S)
        p = parse_point('(-1,0)', S)
        with pytest.raises(SeparationNotFound):
            open_hs_separate(T, p)
        phi = closed_hs_separate_sign(T, p)
        assert not in_closed_hs(phi, p)
        assert all(in_closed_hs(phi, x) for x in T)

    def test_open_separator(self, S):
        T = parse_points('(1,0);(1,1)', S)
        p = parse_point('(-1,0)', S)
        phi = open_hs_separate(T, p)
        assert not in_open_hs(phi, p)
        assert all(in_open_hs(phi, x) for x in T)

    def test_point_in_hull(self, S):
        T = parse_points('(1,0);(0,1)', S)
        with pytest.raises(PreconditionError):
            open_hs_separate(T, parse_point('(1,1)', S))
        with pytest.raises(PreconditionError):
            closed_hs_separate_sign(T, parse_point('(1,1)', S))

    def test_closed_separation_over_the_whole_plane(self, S):
        pairs = 0
        for C in convex_subsets(S, 2):
            for p in all_points(S, 2):
                if p in C:
                    continue
                phi = closed_hs_separate_sign(C, p)
                assert not in_closed_hs(phi, p)
                assert all(in_closed_hs(phi, x) for x in C)
                pairs += 1
        assert pairs == 416

    def test_semidirect_separator(self, QxZ):
        T = parse_points('((-1,0),(1,0));((1,0),(-1,0))', QxZ)
        q = parse_point('((1,0),(1,0))', QxZ)
        phi = open_hs_separate(T, q)
        assert all(in_open_hs(phi, x) for x in T)
        assert not in_open_hs(phi, q)

    def test_semidirect_member(self, QxZ):
        T = parse_points('((-1,0),(1,0));((1,0),(-1,0))', QxZ)
        with pytest.raises(PreconditionError):
            open_hs_separate(T, T[0])
