from fractions import Fraction

import pytest

from src.convex import (CONIC, all_points, cartesian, combine, convex_subsets, hull_finite, intersect,
                        is_convex, member_conv_stringent, project, sample_convex_coefficients)
from src.errors import ArityError, PreconditionError, UnsupportedError
from src.forms import in_open_hs
from src.fourier_motzkin import SEPARATOR
from src.parsing import parse_point, parse_points
from src.tables import five_element_hyperfield
from src.utils import SplitMix64


class TestCombine:
    def test_rational_semidirect_combination(self, QxZ):
        p = parse_point('((-1,0),(1,0))', QxZ)
        q = parse_point('((3,1),(-2,-1))', QxZ)
        k = Fraction(1, 2)
        result = combine([p, q], [QxZ.make(1, 0), QxZ.make(k, -1)])
        assert result.is_singleton
        assert result.single() == parse_point(f'(({3 * k - 1},0),(1,0))', QxZ)

    def test_balanced_coordinate(self, QxZ):
        p = parse_point('((-1,0),(1,0))', QxZ)
        q = parse_point('((3,1),(-2,-1))', QxZ)
        result = combine([p, q], [QxZ.make(1, 0), QxZ.make(Fraction(1, 3), -1)])
        assert result.coords[0].is_balanced
        assert result.contains(parse_point('((5,-1),(1,0))', QxZ))
        assert not result.contains(parse_point('((5,0),(1,0))', QxZ))

    def test_coefficients_must_be_convex(self, S):
        p = parse_point('(1,0)', S)
        with pytest.raises(PreconditionError):
            combine([p], [S.zero()])

    def test_conic_mode_skips_sum_check(self, QxZ):
        p = parse_point('((1,0))', QxZ)
        result = combine([p], [QxZ.make(5, 2)], CONIC)
        assert result.single() == parse_point('((5,2))', QxZ)
        with pytest.raises(PreconditionError):
            combine([p], [QxZ.make(5, 2)])

    def test_arity(self, S):
        with pytest.raises(ArityError):
            combine([parse_point('(1)', S)], [S.one(), S.one()])


class TestHullFinite:
    def test_opposite_points_fill_the_plane(self, S):
        hull = hull_finite(parse_points('(1,-1);(-1,1)', S))
        assert len(hull) == 9

    def test_positive_quadrant(self, S):
        hull = hull_finite(parse_points('(1,0);(0,1)', S))
        assert set(hull) == set(parse_points('(1,0);(0,1);(1,1)', S))

    def test_single_point_is_convex(self, S):
        assert len(hull_finite(parse_points('(1,-1)', S))) == 1

    def test_empty_hull(self, S):
        assert len(hull_finite([], field=S, dim=2)) == 0
        with pytest.raises(ArityError):
            hull_finite([])

    def test_conic_hull_with_origin(self, S):
        hull = hull_finite(parse_points('(1,0)', S), CONIC, include_zero=True)
        assert set(hull) == set(parse_points('(1,0);(0,0)', S))

    def test_five_element_segment(self, H5):
        hull = hull_finite(parse_points('(1);(t)', H5))
        assert set(hull) == set(parse_points('(1);(t)', H5))

    def test_five_element_opposites(self, H5):
        assert len(hull_finite(parse_points('(1);(-1)', H5))) == 5

    def test_tables_sharing_a_name_keep_their_own_hulls(self, H5):
        other = H5.with_positive(five_element_hyperfield(t_positive=False).positive)
        assert other.key == H5.key
        assert other != H5
        assert len({H5, other}) == 2
        assert len(hull_finite(parse_points('(1);(t)', H5))) == 2
        # t + (-t) spans every element once -t is positive
        assert len(hull_finite(parse_points('(1);(t)', other))) == 5

    def test_infinite_instance_rejected(self, QxZ):
        with pytest.raises(UnsupportedError):
            hull_finite([parse_point('((1,0))', QxZ)])

    def test_hull_is_convex_and_idempotent(self, S):
        T = parse_points('(1,0);(-1,1)', S)
        hull = hull_finite(T)
        assert is_convex(hull.points)
        assert hull_finite(hull.points).points == hull.points


class TestSetOperations:
    def test_projection_and_product(self, S):
        square = set(parse_points('(1,0);(0,1);(1,1)', S))
        assert project(square, 0) == set(parse_points('(1);(0)', S))
        line = cartesian(parse_points('(1)', S), parse_points('(0);(1)', S))
        assert line == set(parse_points('(1,0);(1,1)', S))

    def test_intersection(self, S):
        a = hull_finite(parse_points('(1,0);(0,1)', S)).points
        b = hull_finite(parse_points('(1,1);(-1,1)', S)).points
        assert intersect([a, b]) == set(parse_points('(0,1);(1,1)', S))

    def test_convex_subsets(self, S):
        subsets = convex_subsets(S, 1)
        assert frozenset() in subsets
        assert frozenset(parse_points('(1);(-1)', S)) not in subsets
        assert frozenset(all_points(S, 1)) in subsets
        assert len(subsets) == 7

    def test_convex_subsets_space_limit(self, S):
        with pytest.raises(UnsupportedError):
            convex_subsets(S, 3)


class TestMembership:
    def test_member_in_t(self, TR):
        T = parse_points('((+1,0),(-1,1));((+1,2),(+1,0))', TR)
        result = member_conv_stringent(T, T[1])
        assert result.member
        assert [str(w) for w in result.weights] == ['0', '(+1,0)']

    def test_separated_point(self, QxZ):
        p = parse_point('((-1,0),(1,0))', QxZ)
        q = parse_point('((1,0),(1,0))', QxZ)
        result = member_conv_stringent([p, -p], q)
        assert result.member is False
        assert result.certificate.kind == SEPARATOR
        assert all(in_open_hs(result.separator, x) for x in (p, -p))
        assert not in_open_hs(result.separator, q)
        assert in_open_hs(result.q_form, q)
        assert str(result.q_form) == 'X1 + X2 + (-1,0)'

    def test_midpoint_is_member(self, Q):
        T = parse_points('(0,0);(2,0);(0,2)', Q)
        result = member_conv_stringent(T, parse_point('(1/2,1/2)', Q))
        assert result.member
        total = sum(Q.value(w) for w in result.weights)
        assert total == 1

    def test_outside_rational_triangle(self, Q):
        T = parse_points('(0,0);(2,0);(0,2)', Q)
        result = member_conv_stringent(T, parse_point('(2,2)', Q))
        assert result.member is False

    def test_empty_t(self, Q):
        with pytest.raises(ArityError):
            member_conv_stringent([], parse_point('(1)', Q))


class TestSampling:
    @pytest.mark.parametrize('name', ['Q', 'QxZ', 'TR@Q', 'S', 'H5'])
    def test_convex_coefficients_sum_to_one(self, name):
        from src.convex import is_convex_coefficients
        from src.parsing import parse_instance
        f = parse_instance(name)
        rng = SplitMix64(7)
        for n in (1, 2, 4):
            coeffs = sample_convex_coefficients(f, n, rng)
            assert len(coeffs) == n
            assert all(f.is_positive(c) for c in coeffs)
            assert is_convex_coefficients(coeffs)
