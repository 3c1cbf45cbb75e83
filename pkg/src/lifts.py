#!/usr/bin/env python3

"""Lifting sign-hyperfield configurations to the rationals.

The sign hyperfield is the quotient of Q by its positive elements, with
quotient map sgn.  Each construction here returns rational data mapping onto
the given sign data, and checks its claim exactly before returning.
"""

import logging
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import List, Optional, Sequence, Tuple

from .convex import combine, member_conv_stringent
from .errors import InstanceMismatchError, PreconditionError, WitnessError
from .forms import AffineForm, in_closed_hs, in_open_hs, in_variety
from .homomorphism import get_homomorphism, push_forward_poly, sgn_hom
from .hyperfield import HElem, RationalField
from .points import HPoint
from .tables import sign_hyperfield

logger = logging.getLogger(__name__)

QQ = RationalField()


def _sign(a: HElem) -> int:
    if a.field != sign_hyperfield():
        raise InstanceMismatchError(f"Expected a sign element, got {a!r}")
    if a.is_zero:
        return 0
    return 1 if a.field.is_positive(a) else -1


def lift_point(p: HPoint) -> HPoint:
    """Coordinates +1, -1, 0"""
    return HPoint(tuple(QQ.make(_sign(c)) for c in p.coords))


def sgn_point(p: HPoint) -> HPoint:
    return HPoint(tuple(sgn_hom(c) for c in p.coords))


def pullback_form(phi: AffineForm) -> AffineForm:
    """Rational form with coefficients +1, -1, 0 and the same signs"""
    return AffineForm(QQ.make(_sign(phi.constant)), tuple(QQ.make(_sign(c)) for c in phi.coeffs))


def find_sign_witness(T: Sequence[HPoint], qbar: HPoint, max_len: Optional[int] = None) -> Tuple[int, ...]:
    """Indices into T (with repetition) whose sum contains qbar"""
    bound = max_len or qbar.dim + 1
    S = sign_hyperfield()
    for k in range(1, bound + 1):
        for idx in combinations_with_replacement(range(len(T)), k):
            if combine([T[i] for i in idx], [S.one()] * k).contains(qbar):
                return idx
    raise PreconditionError(f"{qbar} is not a combination of at most {bound} points of T")


def construct_field_lift(T: Sequence[HPoint], qbar: HPoint,
                         witness: Optional[Sequence[int]] = None,
                         lifts: Optional[Sequence[HPoint]] = None,
                         max_weight: int = 4) -> Tuple[List[HPoint], HPoint]:
    """Rational T' and q with sgn(T') = T, sgn(q) = qbar and q in conv(T').

    witness lists indices into T whose sign sum contains qbar; point i of the
    witness is lifted with per-coordinate magnitudes chosen so that the average
    of the lifts has the signs of qbar.  Given fixed lifts T', q is searched
    among combinations of at most d + 1 points of T' with integer weights up
    to max_weight.
    """
    if lifts is not None:
        return _lift_in_fixed_hull(T, qbar, list(lifts), max_weight)
    S = sign_hyperfield()
    if witness is None:
        witness = find_sign_witness(T, qbar)
    witness = tuple(witness)
    chosen = [T[i] for i in witness]
    if not witness or not combine(chosen, [S.one()] * len(chosen)).contains(qbar):
        raise WitnessError(f"Witness {witness} does not produce {qbar}")
    k = len(chosen)
    lifted = [[Fraction(_sign(c)) for c in p.coords] for p in chosen]
    for j in range(qbar.dim):
        signs = [row[j] for row in lifted]
        P, N = signs.count(1), signs.count(-1)
        target = _sign(qbar[j])
        if target > 0:
            pos, neg = Fraction(N + 1), Fraction(1)
        elif target < 0:
            pos, neg = Fraction(1), Fraction(P + 1)
        else:
            pos, neg = Fraction(N or 1), Fraction(P or 1)
        for row in lifted:
            row[j] *= pos if row[j] > 0 else neg
    r = [HPoint(tuple(QQ.make(v) for v in row)) for row in lifted]
    q = HPoint(tuple(QQ.make(sum(row[j] for row in lifted) / k) for j in range(qbar.dim)))
    others = [lift_point(p) for i, p in enumerate(T) if i not in witness]
    lifts = list(dict.fromkeys(r + others))
    if sgn_point(q) != qbar:
        raise WitnessError(f"Lift {q} has the wrong signs")
    if not member_conv_stringent(lifts, q).member:
        raise WitnessError(f"Lift {q} is not in the rational hull")
    logger.debug("Lifted %s to %s over %d points", qbar, q, len(lifts))
    return lifts, q


def _lift_in_fixed_hull(T: Sequence[HPoint], qbar: HPoint, lifts: List[HPoint],
                        max_weight: int) -> Tuple[List[HPoint], HPoint]:
    if not lifts or {sgn_point(p) for p in lifts} != set(T):
        raise PreconditionError("Fixed lifts must map onto T under sgn")
    S = sign_hyperfield()
    signs = [sgn_point(p) for p in lifts]
    for k in range(1, min(len(lifts), qbar.dim + 1) + 1):
        for idx in combinations(range(len(lifts)), k):
            if not combine([signs[i] for i in idx], [S.one()] * k).contains(qbar):
                continue
            for weights in product(range(1, max_weight + 1), repeat=k):
                total = sum(weights)
                q = HPoint(tuple(
                    QQ.make(sum(w * QQ.value(lifts[i][j]) for w, i in zip(weights, idx)) / total)
                    for j in range(qbar.dim)))
                if sgn_point(q) != qbar:
                    continue
                if not member_conv_stringent(lifts, q).member:
                    raise WitnessError(f"Lift {q} is not in the rational hull")
                logger.debug("Found %s over fixed lifts with weights %s", q, weights)
                return lifts, q
    raise WitnessError(f"No combination of the fixed lifts with weights up to {max_weight} has signs {qbar}")


def _term_signs(phi: AffineForm, p: HPoint) -> List[int]:
    """Signs of c0, c1 p1, ..., cd pd"""
    return [_sign(phi.constant)] + [_sign(c) * _sign(x) for c, x in zip(phi.coeffs, p.coords)]


def open_hs_lift_witness(phibar: AffineForm, pbar: HPoint,
                         lift: Optional[HPoint] = None) -> Tuple[AffineForm, HPoint]:
    """Rational psi over phibar and a lift p of pbar with p outside HS(psi)"""
    if in_open_hs(phibar, pbar):
        raise PreconditionError(f"{pbar} lies in the open halfspace of {phibar}")
    p = lift or lift_point(pbar)
    if sgn_point(p) != pbar:
        raise PreconditionError(f"{p} is not a lift of {pbar}")
    base = pullback_form(phibar)
    values = [base.constant] + [c for c in base.coeffs]
    terms = [QQ.value(values[0])] + [QQ.value(c) * QQ.value(x) for c, x in zip(values[1:], p.coords)]
    P = sum(t for t in terms if t > 0)
    N = -sum(t for t in terms if t < 0)
    # negative terms scaled by P / N cancel the positive ones exactly
    u = [Fraction(1) if t >= 0 or P == 0 else P / N for t in terms]
    psi = AffineForm(QQ.make(QQ.value(values[0]) * u[0]),
                     tuple(QQ.make(QQ.value(c) * ui) for c, ui in zip(values[1:], u[1:])))
    tau = get_homomorphism('tau', QQ)
    if push_forward_poly(tau, psi) != phibar or in_open_hs(psi, p):
        raise WitnessError(f"Open halfspace lift failed for {phibar} at {pbar}")
    return psi, p


def closed_hs_lift_witness(phibar: AffineForm, pbar: HPoint,
                           on_hyperplane: bool = False) -> Tuple[AffineForm, HPoint]:
    """Rational psi over phibar and a lift q of pbar inside cHS(psi) (inside V(psi) if asked)"""
    if on_hyperplane:
        if not in_variety(phibar, pbar):
            raise PreconditionError(f"{pbar} is not on the hyperplane of {phibar}")
    elif not in_closed_hs(phibar, pbar):
        raise PreconditionError(f"{pbar} lies outside the closed halfspace of {phibar}")
    psi = pullback_form(phibar)
    signs = _term_signs(phibar, pbar)
    s0, var = signs[0], signs[1:]
    P, N = var.count(1), var.count(-1)
    if on_hyperplane:
        if P and N - s0 > 0:
            pos, neg = Fraction(N - s0, P), Fraction(1)
        elif N and P + s0 > 0:
            pos, neg = Fraction(1), Fraction(P + s0, N)
        else:
            pos, neg = Fraction(1), Fraction(1)
    elif P:
        pos, neg = Fraction(N + (1 if s0 < 0 else 0) + 1), Fraction(1)
    elif s0 > 0:
        pos, neg = Fraction(1), Fraction(1, N + 1)
    else:
        pos, neg = Fraction(1), Fraction(1)
    coords = []
    for x, s in zip(pbar.coords, var):
        magnitude = pos if s > 0 else neg if s < 0 else Fraction(1)
        coords.append(QQ.make(_sign(x) * magnitude))
    q = HPoint(tuple(coords))
    check = in_variety if on_hyperplane else in_closed_hs
    if sgn_point(q) != pbar or not check(psi, q):
        raise WitnessError(f"Closed halfspace lift failed for {phibar} at {pbar}")
    return psi, q
