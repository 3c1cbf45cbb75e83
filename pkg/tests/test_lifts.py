from fractions import Fraction
from itertools import product

import pytest

from src.convex import all_points, member_conv_stringent
from src.errors import InstanceMismatchError, PreconditionError, WitnessError
from src.forms import in_closed_hs, in_open_hs, in_variety, parse_form
from src.halfspace import all_forms
from src.homomorphism import get_homomorphism, push_forward_poly
from src.lifts import (QQ, closed_hs_lift_witness, construct_field_lift, find_sign_witness, lift_point,
                       open_hs_lift_witness, pullback_form, sgn_point)
from src.parsing import parse_point, parse_points
from src.points import HPoint


def rational(*values):
    return HPoint(tuple(QQ.make(Fraction(v)) for v in values))


class TestPointLifts:
    def test_lift_and_sign(self, S):
        p = parse_point('(1,-1,0)', S)
        assert lift_point(p) == rational(1, -1, 0)
        assert sgn_point(rational(5, Fraction(-1, 3), 0)) == p

    def test_only_sign_points(self, QxZ):
        with pytest.raises(InstanceMismatchError):
            lift_point(parse_point('((1,0))', QxZ))

    def test_pullback_keeps_signs(self, S):
        psi = pullback_form(parse_form('X1 + -1*X2 + 1', S))
        assert str(psi) == 'X1 + -1*X2 + 1'
        assert psi.field == QQ


class TestFieldLift:
    def test_opposite_points(self, S):
        T = parse_points('(1,-1);(-1,1)', S)
        lifts, q = construct_field_lift(T, parse_point('(1,0)', S))
        assert q == rational(Fraction(1, 2), 0)
        assert {sgn_point(x) for x in lifts} == set(T)
        assert member_conv_stringent(lifts, q).member

    def test_every_point_of_the_hull(self, S):
        T = parse_points('(1,-1);(-1,1)', S)
        for coords in product(S.elements(), repeat=2):
            qbar = HPoint(coords)
            lifts, q = construct_field_lift(T, qbar)
            assert sgn_point(q) == qbar
            assert {sgn_point(x) for x in lifts} == set(T)

    def test_witness_search(self, S):
        T = parse_points('(1,0);(0,1)', S)
        assert find_sign_witness(T, parse_point('(1,1)', S)) == (0, 1)
        with pytest.raises(PreconditionError):
            find_sign_witness(T, parse_point('(-1,0)', S))

    def test_bad_witness(self, S):
        T = parse_points('(1,0);(0,1)', S)
        with pytest.raises(WitnessError):
            construct_field_lift(T, parse_point('(1,1)', S), witness=(0,))

    def test_fixed_lifts_cover_the_sign_hull(self, S, Q):
        T = parse_points('(1,-1);(-1,1)', S)
        fixed = parse_points('(-1,2);(-2,1);(1,-2);(2,-1)', Q)
        for qbar in all_points(S, 2):
            lifts, q = construct_field_lift(T, qbar, lifts=fixed)
            assert lifts == fixed
            assert sgn_point(q) == qbar
            assert member_conv_stringent(fixed, q).member

    def test_fixed_lift_weights(self, S, Q):
        T = parse_points('(1,-1);(-1,1)', S)
        fixed = parse_points('(-1,2);(-2,1);(1,-2);(2,-1)', Q)
        _, q = construct_field_lift(T, parse_point('(1,0)', S), lifts=fixed)
        assert q == rational(1, 0)

    def test_fixed_lifts_must_cover_t(self, S, Q):
        T = parse_points('(1,-1);(-1,1)', S)
        with pytest.raises(PreconditionError):
            construct_field_lift(T, parse_point('(0,0)', S), lifts=parse_points('(1,-2)', Q))


class TestHalfspaceLifts:
    def test_open_lift(self, S):
        phibar = parse_form('X1 + X2', S)
        psi, p = open_hs_lift_witness(phibar, parse_point('(1,-1)', S))
        assert str(psi) == 'X1 + X2'
        assert p == rational(1, -1)
        assert not in_open_hs(psi, p)

    def test_open_lift_rebalances_terms(self, S):
        phibar = parse_form('X1 + X2 + -1', S)
        psi, p = open_hs_lift_witness(phibar, parse_point('(1,1)', S))
        assert str(psi) == 'X1 + X2 + -2'
        assert in_variety(psi, p)

    def test_open_lift_needs_outside_point(self, S):
        with pytest.raises(PreconditionError):
            open_hs_lift_witness(parse_form('X1 + X2', S), parse_point('(1,1)', S))

    def test_closed_lift(self, S):
        phibar = parse_form('X1 + X2', S)
        psi, q = closed_hs_lift_witness(phibar, parse_point('(1,-1)', S))
        assert q == rational(2, -1)
        assert in_open_hs(psi, q)

    def test_closed_lift_on_hyperplane(self, S):
        phibar = parse_form('X1 + X2', S)
        psi, q = closed_hs_lift_witness(phibar, parse_point('(1,-1)', S), on_hyperplane=True)
        assert q == rational(1, -1)
        assert in_variety(psi, q)

    def test_closed_lift_every_point(self, S):
        phibar = parse_form('X1 + -1*X2 + 1', S)
        for coords in product(S.elements(), repeat=2):
            pbar = HPoint(coords)
            if not in_closed_hs(phibar, pbar):
                with pytest.raises(PreconditionError):
                    closed_hs_lift_witness(phibar, pbar)
                continue
            psi, q = closed_hs_lift_witness(phibar, pbar)
            assert sgn_point(q) == pbar
            assert in_closed_hs(psi, q)

    def test_every_form_and_point_of_the_plane(self, S):
        tau = get_homomorphism('tau', QQ)
        forms = all_forms(S, 2)
        points = all_points(S, 2)
        assert len(forms) == 27
        for phibar in forms:
            for pbar in points:
                if in_open_hs(phibar, pbar):
                    with pytest.raises(PreconditionError):
                        open_hs_lift_witness(phibar, pbar)
                else:
                    psi, p = open_hs_lift_witness(phibar, pbar)
                    assert push_forward_poly(tau, psi) == phibar
                    assert sgn_point(p) == pbar and not in_open_hs(psi, p)
                if in_closed_hs(phibar, pbar):
                    psi, q = closed_hs_lift_witness(phibar, pbar)
                    assert push_forward_poly(tau, psi) == phibar
                    assert sgn_point(q) == pbar and in_closed_hs(psi, q)
                else:
                    with pytest.raises(PreconditionError):
                        closed_hs_lift_witness(phibar, pbar)
                if in_variety(phibar, pbar):
                    psi, q = closed_hs_lift_witness(phibar, pbar, on_hyperplane=True)
                    assert sgn_point(q) == pbar and in_variety(psi, q)
