#!/usr/bin/env python3

"""Open and closed halfspaces and hyperplanes of affine forms.

For a form phi over an ordered hyperfield

    HS(phi)  = {p : phi(p) inside H+}
    cHS(phi) = {p : phi(p) meets H+ or 0}
    V(phi)   = {p : 0 in phi(p)}

Over a stringent hyperfield cHS(phi) is the disjoint union of HS(phi) and V(phi).
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence

from .convex import all_points, hull_finite, is_convex, member_conv_stringent
from .errors import ArityError, NoOrderingError, PreconditionError, SeparationNotFound, UnsupportedError
from .forms import AffineForm, in_closed_hs, in_open_hs, in_variety
from .hyperfield import Hyperfield
from .points import HPoint, sorted_points
from .tables import sign_hyperfield

logger = logging.getLogger(__name__)

OPEN = 'open'
CLOSED = 'closed'
VARIETY = 'variety'
KINDS = (OPEN, CLOSED, VARIETY)

_QUERIES = {OPEN: in_open_hs, CLOSED: in_closed_hs, VARIETY: in_variety}


def query(phi: AffineForm, p: HPoint, kind: str) -> bool:
    if kind not in _QUERIES:
        raise ValueError(f"Unknown halfspace kind {kind!r}, expected one of {KINDS}")
    return _QUERIES[kind](phi, p)


def _finite_ordered(f: Hyperfield):
    if not f.finite:
        raise UnsupportedError(f"{f.key} is infinite; forms cannot be enumerated")
    if not f.ordered:
        raise NoOrderingError(f"{f.key} is not ordered")


def all_forms(f: Hyperfield, d: int, include_constant: bool = True) -> List[AffineForm]:
    """Every affine form in d variables up to positive scaling, in a fixed order"""
    _finite_ordered(f)
    seen = {}
    for entries in product(f.elements(), repeat=d + 1):
        phi = AffineForm(entries[0], tuple(entries[1:])).canonical()
        if not include_constant and phi.is_constant:
            continue
        seen.setdefault(phi.sort_key(), phi)
    return [seen[k] for k in sorted(seen)]


def enumerate_open_hs_containing(T: Iterable[HPoint], f: Optional[Hyperfield] = None, d: Optional[int] = None,
                                 include_constant: bool = False) -> List[AffineForm]:
    """Forms whose open halfspace contains T.

    Constant forms are left out unless include_constant is set: the positive
    constant contains every set.  With T empty every form qualifies, so over
    S^2 this gives 24 forms, or all 27 with constants.
    """
    T = list(T)
    if T:
        f, d = T[0].field, T[0].dim
    elif f is None or d is None:
        raise ArityError("Empty T needs an explicit hyperfield and dimension")
    return [phi for phi in all_forms(f, d, include_constant) if all(in_open_hs(phi, p) for p in T)]


def halfspace_points(phi: AffineForm, kind: str = OPEN) -> List[HPoint]:
    _finite_ordered(phi.field)
    return [p for p in all_points(phi.field, phi.dim) if query(phi, p, kind)]


@dataclass
class DecompositionReport:
    form: str
    holds: bool
    checked: int
    witnesses: List[str] = field(default_factory=list)

    def to_dict(self):
        return {'form': self.form, 'holds': self.holds, 'checked': self.checked, 'witnesses': self.witnesses}


def stringent_decomposition_check(phi: AffineForm, points: Optional[Sequence[HPoint]] = None) -> DecompositionReport:
    """cHS = HS disjoint-union V, on every point (finite) or on the given sample"""
    f = phi.field
    if not f.ordered:
        raise NoOrderingError(f"{f.key} is not ordered")
    if points is None:
        if not f.finite:
            raise UnsupportedError(f"{f.key} is infinite; pass sampled points")
        points = all_points(f, phi.dim)
    witnesses = []
    for p in points:
        o, c, v = in_open_hs(phi, p), in_closed_hs(phi, p), in_variety(phi, p)
        if c != (o or v) or (o and v):
            witnesses.append(str(p))
    return DecompositionReport(str(phi), not witnesses, len(points), witnesses)


def closed_hs_separate_sign(T: Iterable[HPoint], p: HPoint) -> AffineForm:
    """A form with hull(T) inside cHS(phi) and p outside it"""
    T = list(T)
    f = p.field
    _finite_ordered(f)
    hull = hull_finite(T, field=f, dim=p.dim)
    if p in hull:
        raise PreconditionError(f"{p} lies in the hull of T")
    for phi in all_forms(f, p.dim):
        if not in_closed_hs(phi, p) and all(in_closed_hs(phi, x) for x in hull.points):
            logger.debug("Closed separator of %s: %s", p, phi)
            return phi
    raise SeparationNotFound(f"No closed halfspace separates {p} from the hull over {f.key}^{p.dim}")


@dataclass
class ClosedNotConvex:
    form: AffineForm
    closed: List[HPoint]
    open: List[HPoint]
    variety: List[HPoint]
    convex: bool

    def to_dict(self) -> Dict:
        return {'form': str(self.form), 'closed': [str(p) for p in self.closed],
                'open': [str(p) for p in self.open], 'variety': [str(p) for p in self.variety],
                'convex': self.convex}


def closed_not_convex_witness() -> ClosedNotConvex:
    """cHS(X1 + X2) over the sign plane is HS plus V, and is not convex"""
    S = sign_hyperfield()
    phi = AffineForm.linear([S.one(), S.one()])
    closed = halfspace_points(phi, CLOSED)
    return ClosedNotConvex(phi, sorted_points(closed), sorted_points(halfspace_points(phi, OPEN)),
                           sorted_points(halfspace_points(phi, VARIETY)), is_convex(closed))


def open_hs_separate(T: Iterable[HPoint], p: HPoint, try_row_orders: bool = False) -> AffineForm:
    """A form with T inside HS(phi) and p outside it.

    Finite instances search every form.  Dense stringent instances read the
    form off the Farkas separator of the membership matrix.
    """
    T = list(T)
    f = p.field
    if not f.finite:
        result = member_conv_stringent(T, p, try_row_orders)
        if result.member is None:
            raise SeparationNotFound(f"Membership of {p} is undecided over {f.key}")
        if result.member:
            raise PreconditionError(f"{p} lies in the hull of T")
        return result.separator
    _finite_ordered(f)
    if p in hull_finite(T, field=f, dim=p.dim):
        raise PreconditionError(f"{p} lies in the hull of T")
    for phi in all_forms(f, p.dim):
        if not in_open_hs(phi, p) and all(in_open_hs(phi, x) for x in T):
            logger.debug("Open separator of %s: %s", p, phi)
            return phi
    raise SeparationNotFound(f"No open halfspace separates {p} from T over {f.key}^{p.dim}")
