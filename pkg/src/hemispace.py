#!/usr/bin/env python3

"""Hemispaces (convex sets with convex complement) over finite hyperfields."""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .convex import all_points, convex_subsets, hull_finite, is_convex
from .errors import KakutaniCounterexample, PreconditionError
from .halfspace import CLOSED, OPEN, all_forms, halfspace_points
from .homomorphism import sgn_hom
from .hyperfield import Hyperfield, mul
from .points import HPoint, sorted_points

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Hemispace:
    field: Hyperfield
    dim: int
    points: FrozenSet[HPoint]

    def complement(self) -> 'Hemispace':
        return Hemispace(self.field, self.dim, frozenset(all_points(self.field, self.dim)) - self.points)

    def __contains__(self, p: HPoint) -> bool:
        return p in self.points

    def to_dict(self):
        return {'hyperfield': self.field.key,
                'points': [str(p) for p in sorted_points(list(self.points))],
                'complement': [str(p) for p in sorted_points(list(self.complement().points))]}


def is_hemispace(X: Iterable[HPoint], f: Hyperfield, d: int) -> bool:
    X = set(X)
    rest = set(all_points(f, d)) - X
    return is_convex(X) and is_convex(rest)


def kakutani_separate(A: Iterable[HPoint], B: Iterable[HPoint], f: Hyperfield, d: int) -> Hemispace:
    """Hemispace X with A inside X and B inside its complement.

    Backtracking: both sides are kept hull-closed, so every point a side forces
    is added before branching on the first free point.
    """
    A, B = frozenset(A), frozenset(B)
    if A & B:
        raise PreconditionError("A and B intersect")
    for name, S in (('A', A), ('B', B)):
        if not is_convex(S):
            raise PreconditionError(f"{name} is not convex")
    if not A:
        return Hemispace(f, d, frozenset())
    space = sorted_points(all_points(f, d))

    def close(S: FrozenSet[HPoint]) -> FrozenSet[HPoint]:
        return hull_finite(S, field=f, dim=d).points if S else S

    # depth-first over (X side, complement side)
    stack: List[Tuple[FrozenSet[HPoint], FrozenSet[HPoint]]] = [(A, B)]
    explored = 0
    while stack:
        X, Y = stack.pop()
        X, Y = close(X), close(Y)
        explored += 1
        if X & Y:
            continue
        free = [p for p in space if p not in X and p not in Y]
        if not free:
            logger.debug("Kakutani search: %d states", explored)
            return Hemispace(f, d, X)
        z = free[0]
        stack.append((X, Y | {z}))
        stack.append((X | {z}, Y))
    raise KakutaniCounterexample(f"No hemispace separates the sets over {f.key}^{d}")


def pasch_intersection(r: HPoint, q1: HPoint, q2: HPoint, p1: HPoint, p2: HPoint) -> FrozenSet[HPoint]:
    """hull(q1, p2) meet hull(q2, p1), for p1 in hull(r, q1) and p2 in hull(r, q2)"""
    if p1 not in hull_finite([r, q1]):
        raise PreconditionError(f"{p1} is not in the hull of {r} and {q1}")
    if p2 not in hull_finite([r, q2]):
        raise PreconditionError(f"{p2} is not in the hull of {r} and {q2}")
    return hull_finite([q1, p2]).points & hull_finite([q2, p1]).points


def pasch_check(r: HPoint, q1: HPoint, q2: HPoint, p1: HPoint, p2: HPoint) -> bool:
    return bool(pasch_intersection(r, q1, q2, p1, p2))


def u_invariance_failures(X: Iterable[HPoint], rational_points: Sequence[HPoint],
                          scalings: Sequence[Sequence]) -> List[str]:
    """Rational points whose membership in sgn^-1(X) changes under a positive rescaling of coordinates"""
    X = set(X)
    failures = []
    for p in rational_points:
        inside = HPoint(tuple(sgn_hom(c) for c in p.coords)) in X
        for u in scalings:
            if any(x.is_zero or not x.field.is_positive(x) for x in u):
                raise PreconditionError("Rescalings must be positive")
            scaled = HPoint(tuple(mul(x, c) for x, c in zip(u, p.coords)))
            if (HPoint(tuple(sgn_hom(c) for c in scaled.coords)) in X) != inside:
                failures.append(f"{p} scaled by {[str(x) for x in u]}")
    return failures


def halfspace_sets(f: Hyperfield, d: int) -> List[FrozenSet[HPoint]]:
    """Point sets of every open and closed halfspace"""
    out = []
    for phi in all_forms(f, d):
        out.append(frozenset(halfspace_points(phi, OPEN)))
        out.append(frozenset(halfspace_points(phi, CLOSED)))
    return out


def hemispaces_not_halfspaces(f: Hyperfield, d: int) -> List[FrozenSet[HPoint]]:
    """Hemispaces whose point set is neither an open nor a closed halfspace"""
    known = set(halfspace_sets(f, d))
    found = []
    for S in convex_subsets(f, d):
        if S not in known and is_hemispace(S, f, d):
            found.append(S)
    return found
